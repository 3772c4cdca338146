#include "cantor/point.hpp"

#include <algorithm>

#include "cantor/errors.hpp"

namespace cantor {

CantorPoint::CantorPoint(std::string word, Tail tail) : word_(std::move(word)), tail_(tail) {
    for (char c : word_) {
        if (c != '0' && c != '2') {
            throw Error(std::string("invalid ternary digit '") + c + "' in point word");
        }
    }
    while (!word_.empty() && word_.back() == static_cast<char>(tail_)) {
        word_.pop_back();
    }
}

std::string CantorPoint::expansion_prefix(std::size_t length) const {
    std::string out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(digit_at(i));
    }
    return out;
}

std::strong_ordering CantorPoint::operator<=>(const CantorPoint& other) const {
    // Beyond max(|a|,|b|) both expansions are constant, so one extra digit decides.
    std::size_t n = std::max(word_.size(), other.word_.size()) + 1;
    for (std::size_t i = 0; i < n; ++i) {
        char a = digit_at(i);
        char b = other.digit_at(i);
        if (a != b) {
            return a <=> b;
        }
    }
    return std::strong_ordering::equal;
}

CantorPoint parse_point(std::string_view text) {
    std::string word;
    Tail tail = Tail::Zeros;
    std::size_t i = 0;
    while (i < text.size() && text[i] != '~') {
        char c = text[i];
        if (c != '0' && c != '2') {
            throw ParseError(i, std::string("unexpected character '") + c + "' in point");
        }
        word.push_back(c);
        ++i;
    }
    if (i < text.size()) {
        // tail marker
        if (i + 2 != text.size()) {
            throw ParseError(i, "tail marker must be '~0' or '~2' at the end of the point");
        }
        char t = text[i + 1];
        if (t == '0') {
            tail = Tail::Zeros;
        } else if (t == '2') {
            tail = Tail::Twos;
        } else {
            throw ParseError(i + 1, std::string("invalid tail digit '") + t + "'");
        }
    }
    return CantorPoint(std::move(word), tail);
}

std::string to_string(const CantorPoint& p) {
    if (p.tail() == Tail::Twos) {
        return p.word() + "~2";
    }
    return p.word().empty() ? "0" : p.word();
}

}  // namespace cantor
