#include "cantor/basic_set.hpp"

#include "cantor/errors.hpp"

namespace cantor {

BasicSet::BasicSet(std::string prefix) : prefix_(std::move(prefix)) {
    for (char c : prefix_) {
        if (c != '0' && c != '2') {
            throw Error(std::string("invalid ternary digit '") + c + "' in basic-set prefix");
        }
    }
}

bool BasicSet::contains(const CantorPoint& p) const {
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (p.digit_at(i) != prefix_[i]) {
            return false;
        }
    }
    return true;
}

PrefixRelation prefix_relation(const BasicSet& u, const BasicSet& v) {
    const std::string& a = u.prefix();
    const std::string& b = v.prefix();
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return PrefixRelation::Disjoint;
        }
    }
    if (a.size() == b.size()) {
        return PrefixRelation::Equal;
    }
    return a.size() < b.size() ? PrefixRelation::UContainsV : PrefixRelation::VContainsU;
}

BasicSet parse_basic_set(std::string_view text) {
    if (text == "*") {
        return BasicSet();
    }
    if (text.empty()) {
        throw ParseError(0, "empty basic set; use '*' for the whole space");
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '2') {
            throw ParseError(i, std::string("unexpected character '") + text[i] + "' in basic set");
        }
    }
    return BasicSet(std::string(text));
}

std::string to_string(const BasicSet& u) {
    return u.is_whole_space() ? "*" : u.prefix();
}

}  // namespace cantor
