#pragma once

#include <string>
#include <string_view>

#include "cantor/point.hpp"

namespace cantor {

// A basic clopen subset of C: all points whose expansion begins with
// `prefix`. The empty prefix denotes the whole space ("*" in text form).
// Under reverse inclusion the basic sets form a tree, and each one is an
// interval in the real order.
class BasicSet {
public:
    BasicSet() = default;  // all of C

    // Throws Error if the prefix contains a digit other than 0 or 2.
    explicit BasicSet(std::string prefix);

    const std::string& prefix() const { return prefix_; }
    std::size_t length() const { return prefix_.size(); }
    bool is_whole_space() const { return prefix_.empty(); }

    bool contains(const CantorPoint& p) const;

    CantorPoint left_endpoint() const { return CantorPoint(prefix_, Tail::Zeros); }
    CantorPoint right_endpoint() const { return CantorPoint(prefix_, Tail::Twos); }

    // Lexicographic prefix order; on pairwise disjoint sets this is the
    // left-to-right order of the intervals.
    auto operator<=>(const BasicSet& other) const = default;

private:
    std::string prefix_;
};

enum class PrefixRelation { UContainsV, VContainsU, Equal, Disjoint };

// Tree structure of the base: u contains v exactly when u.prefix is a
// proper prefix of v.prefix; incomparable prefixes give disjoint sets.
PrefixRelation prefix_relation(const BasicSet& u, const BasicSet& v);

// Text format: the bare prefix word, with "*" denoting the whole space.
BasicSet parse_basic_set(std::string_view text);
std::string to_string(const BasicSet& u);

}  // namespace cantor
