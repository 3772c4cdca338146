#include "cantor/cover.hpp"

#include <algorithm>

#include "cantor/errors.hpp"
#include "cantor/subgroup.hpp"

namespace cantor {

Cover::Cover(std::vector<BasicSet> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
    if (parts_.empty()) {
        throw InvalidCover("incomplete cover: no parts");
    }
    for (const BasicSet& u : parts_) {
        max_prefix_length_ = std::max(max_prefix_length_, u.length());
    }
    if (max_prefix_length_ > 62) {
        throw InvalidCover("cover prefixes longer than 62 digits are not supported");
    }
    // In lexicographic order any prefix-comparable pair is adjacent.
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        if (prefix_relation(parts_[i], parts_[i + 1]) != PrefixRelation::Disjoint) {
            throw InvalidCover("not disjoint: " + to_string(parts_[i]) + " and " +
                               to_string(parts_[i + 1]) + " overlap");
        }
    }
    // Disjoint parts partition the words of length L exactly when the
    // extension counts add up to 2^L.
    std::uint64_t total = 0;
    for (const BasicSet& u : parts_) {
        total += std::uint64_t{1} << (max_prefix_length_ - u.length());
    }
    if (total != std::uint64_t{1} << max_prefix_length_) {
        throw InvalidCover("incomplete cover: parts leave part of the space uncovered");
    }
}

Cover Cover::trivial() {
    return Cover({BasicSet()});
}

const BasicSet& Cover::part_containing(const CantorPoint& p) const {
    for (const BasicSet& u : parts_) {
        if (u.contains(p)) {
            return u;
        }
    }
    // unreachable: a cover partitions C
    throw Error("internal: cover has no part containing " + to_string(p));
}

bool in_subgroup(const Cover& gamma, const GroupElement& f) {
    for (const BasicSet& u : gamma.parts()) {
        if (classify(u, f) == Classification::Odd) {
            return false;
        }
    }
    return true;
}

Cover refine_to_cover(const std::vector<BasicSet>& special) {
    std::size_t level = 0;
    for (const BasicSet& u : special) {
        level = std::max(level, u.length());
    }
    for (std::size_t i = 0; i < special.size(); ++i) {
        for (std::size_t j = i + 1; j < special.size(); ++j) {
            if (prefix_relation(special[i], special[j]) != PrefixRelation::Disjoint) {
                throw NotDisjoint("special parts " + to_string(special[i]) + " and " +
                                  to_string(special[j]) + " overlap");
            }
        }
    }
    if (level > 26) {
        throw Error("refinement level too large");
    }
    std::vector<BasicSet> parts = special;
    std::uint64_t words = std::uint64_t{1} << level;
    for (std::uint64_t w = 0; w < words; ++w) {
        std::string prefix;
        prefix.reserve(level);
        for (std::size_t i = 0; i < level; ++i) {
            prefix.push_back((w >> (level - 1 - i)) & 1 ? '2' : '0');
        }
        BasicSet candidate(prefix);
        bool under_special = false;
        for (const BasicSet& u : special) {
            if (prefix_relation(u, candidate) != PrefixRelation::Disjoint) {
                under_special = true;
                break;
            }
        }
        if (!under_special) {
            parts.push_back(std::move(candidate));
        }
    }
    return Cover(std::move(parts));
}

std::vector<GroupElement> enumerate_subgroup(const Cover& gamma, int depth, std::uint64_t cap,
                                             EnumerationStats* stats) {
    SubgroupGrid grid(gamma, depth);
    std::vector<GroupElement> out;
    EnumerationStats local = grid.for_each(cap, [&](const std::vector<std::uint64_t>& tuple) {
        out.push_back(grid.element(tuple));
        return true;
    });
    if (stats != nullptr) {
        *stats = local;
    }
    return out;
}

Cover parse_cover(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
            ++i;
        }
    };
    skip();
    if (i >= text.size() || text[i] != '{') {
        throw ParseError(i, "expected '{'");
    }
    ++i;
    std::vector<BasicSet> parts;
    skip();
    if (i < text.size() && text[i] == '}') {
        ++i;
    } else {
        while (true) {
            skip();
            std::size_t start = i;
            while (i < text.size() && text[i] != ',' && text[i] != '}' && text[i] != ' ') {
                ++i;
            }
            if (i == start) {
                throw ParseError(start, "expected a basic set");
            }
            try {
                parts.push_back(parse_basic_set(text.substr(start, i - start)));
            } catch (const ParseError& e) {
                throw ParseError(start + e.position(), "bad basic set in cover");
            }
            skip();
            if (i >= text.size()) {
                throw ParseError(i, "unterminated cover; expected '}'");
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
    skip();
    if (i != text.size()) {
        throw ParseError(i, "trailing characters after cover");
    }
    return Cover(std::move(parts));
}

std::string to_string(const Cover& gamma) {
    std::string out = "{";
    bool first = true;
    for (const BasicSet& u : gamma.parts()) {
        if (!first) {
            out += ", ";
        }
        out += to_string(u);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace cantor
