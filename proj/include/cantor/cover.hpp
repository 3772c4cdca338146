#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/basic_set.hpp"
#include "cantor/group_element.hpp"

namespace cantor {

// A finite partition of C into basic sets, i.e. a complete antichain of
// prefixes: the parts are pairwise disjoint and, with L the longest prefix
// length, every word of length L extends exactly one part. Validity is
// checked on construction, so a Cover value is always a genuine cover.
class Cover {
public:
    // Sorts the parts into left-to-right order. Throws InvalidCover if the
    // parts overlap or fail to cover the whole space.
    explicit Cover(std::vector<BasicSet> parts);

    static Cover trivial();  // the one-part cover {*}

    const std::vector<BasicSet>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    std::size_t max_prefix_length() const { return max_prefix_length_; }

    const BasicSet& part_containing(const CantorPoint& p) const;

    bool operator==(const Cover& other) const = default;

private:
    std::vector<BasicSet> parts_;
    std::size_t max_prefix_length_ = 0;
};

// Membership in the parity subgroup H_gamma: true exactly when f meets every
// part of gamma in an even (possibly zero) number of points. These subgroups,
// one per finite disjoint cover, form a neighborhood base at zero for the
// group topology under study.
bool in_subgroup(const Cover& gamma, const GroupElement& f);

// Completes a pairwise-disjoint family to a cover: keeps every special part
// and adds all basic sets of the maximal special length whose prefixes are
// incomparable with every special prefix. Throws NotDisjoint if the inputs
// overlap.
Cover refine_to_cover(const std::vector<BasicSet>& special);

struct EnumerationStats {
    std::uint64_t emitted = 0;
    bool truncated = false;  // the cap cut the enumeration short
};

// The elements of H_gamma whose points lie on the depth-d grid
// { w000... : |w| = d }, ordered by cardinality and then lexicographically
// by the ascending point tuples; the identity comes first. Stops after
// `cap` elements, reporting truncation through `stats`.
//
// Throws DepthTooSmall if depth < max prefix length of gamma or depth < 1.
std::vector<GroupElement> enumerate_subgroup(const Cover& gamma, int depth, std::uint64_t cap,
                                             EnumerationStats* stats = nullptr);

// Text format: "{w1, w2, ...}" of prefix words ("*" = whole space).
Cover parse_cover(std::string_view text);
std::string to_string(const Cover& gamma);

}  // namespace cantor
