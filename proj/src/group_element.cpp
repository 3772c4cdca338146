#include "cantor/group_element.hpp"

#include <algorithm>

#include "cantor/errors.hpp"

namespace cantor {

GroupElement::GroupElement(std::vector<CantorPoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end()) {
        throw Error("duplicate point " + to_string(*dup) + " in group element");
    }
}

bool GroupElement::contains(const CantorPoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

GroupElement symmetric_difference(const GroupElement& a, const GroupElement& b) {
    std::vector<CantorPoint> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        auto cmp = *ia <=> *ib;
        if (cmp == std::strong_ordering::less) {
            out.push_back(*ia++);
        } else if (cmp == std::strong_ordering::greater) {
            out.push_back(*ib++);
        } else {
            ++ia;  // shared point cancels
            ++ib;
        }
    }
    out.insert(out.end(), ia, a.end());
    out.insert(out.end(), ib, b.end());
    // already sorted and duplicate-free
    GroupElement result;
    result.points_ = std::move(out);
    return result;
}

Classification classify(const BasicSet& u, const GroupElement& f) {
    std::size_t count = 0;
    for (const CantorPoint& p : f) {
        if (u.contains(p)) {
            ++count;
        }
    }
    if (count == 0) {
        return Classification::Void;
    }
    return count % 2 == 0 ? Classification::Even : Classification::Odd;
}

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Void: return "void";
        case Classification::Even: return "even";
        case Classification::Odd: return "odd";
    }
    return "?";
}

namespace {

void skip_spaces(std::string_view text, std::size_t& i) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
        ++i;
    }
}

}  // namespace

GroupElement parse_group_element(std::string_view text) {
    std::size_t i = 0;
    skip_spaces(text, i);
    if (i >= text.size() || text[i] != '{') {
        throw ParseError(i, "expected '{'");
    }
    ++i;
    std::vector<CantorPoint> points;
    skip_spaces(text, i);
    if (i < text.size() && text[i] == '}') {
        ++i;
    } else {
        while (true) {
            skip_spaces(text, i);
            std::size_t start = i;
            while (i < text.size() && text[i] != ',' && text[i] != '}' && text[i] != ' ') {
                ++i;
            }
            if (i == start) {
                throw ParseError(start, "expected a point");
            }
            try {
                points.push_back(parse_point(text.substr(start, i - start)));
            } catch (const ParseError& e) {
                throw ParseError(start + e.position(), "bad point in group element");
            }
            skip_spaces(text, i);
            if (i >= text.size()) {
                throw ParseError(i, "unterminated group element; expected '}'");
            }
            if (text[i] == '}') {
                ++i;
                break;
            }
            if (text[i] != ',') {
                throw ParseError(i, "expected ',' or '}'");
            }
            ++i;
        }
    }
    skip_spaces(text, i);
    if (i != text.size()) {
        throw ParseError(i, "trailing characters after group element");
    }
    std::sort(points.begin(), points.end());
    auto dup = std::adjacent_find(points.begin(), points.end());
    if (dup != points.end()) {
        throw ParseError(0, "duplicate point " + to_string(*dup) + " in group element");
    }
    return GroupElement(std::move(points));
}

std::string to_string(const GroupElement& f) {
    std::string out = "{";
    bool first = true;
    for (const CantorPoint& p : f) {
        if (!first) {
            out += ", ";
        }
        out += to_string(p);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace cantor
