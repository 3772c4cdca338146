#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cantor/cover.hpp"

namespace cantor {

// Enumeration engine behind enumerate_subgroup and the witness verifiers.
//
// The depth-d grid is the 2^d points { w000... : |w| = d } in ascending
// order; the grid index of a point is its rank, so index tuples compare the
// same way as point tuples. Because the parts of a cover are intervals, each
// part owns a contiguous index block, and an element of H_gamma restricted
// to the grid is a choice of an even-size subset in every block.
class SubgroupGrid {
public:
    // Throws DepthTooSmall unless 1 <= depth and depth >= max prefix length
    // of gamma; throws Error for depth > 20 (the grid would be impractical).
    SubgroupGrid(const Cover& gamma, int depth);

    int depth() const { return depth_; }
    std::uint64_t grid_size() const { return std::uint64_t{1} << depth_; }
    std::size_t block_count() const { return blocks_.size(); }

    CantorPoint point(std::uint64_t index) const;
    std::optional<std::uint64_t> index_of(const CantorPoint& p) const;

    GroupElement element(const std::vector<std::uint64_t>& tuple) const;

    // Bitmask forms, available when the grid fits in 64 bits (depth <= 6).
    std::uint64_t bit_mask(const std::vector<std::uint64_t>& tuple) const;
    std::optional<std::uint64_t> bit_mask(const GroupElement& f) const;
    std::uint64_t set_mask(const BasicSet& u) const;

    // Visits the elements of H_gamma on the grid in (cardinality, lex) order
    // as strictly increasing tuples of grid indices; the identity first.
    // fn: bool(const std::vector<std::uint64_t>&) — return false to stop.
    // Stops after `cap` elements and flags truncation if more were left.
    template <class Fn>
    EnumerationStats for_each(std::uint64_t cap, Fn&& fn) const;

private:
    struct Block {
        std::uint64_t begin;
        std::uint64_t end;
    };

    template <class Fn>
    struct Walk;

    int depth_ = 0;
    std::vector<Block> blocks_;              // consecutive, covering [0, 2^depth)
    std::vector<std::uint64_t> suffix_max_;  // max even picks from block i onward
};

template <class Fn>
struct SubgroupGrid::Walk {
    const SubgroupGrid& grid;
    Fn& fn;
    std::uint64_t cap;
    EnumerationStats stats;
    std::vector<std::uint64_t> tuple;

    bool emit() {
        if (stats.emitted == cap) {
            stats.truncated = true;
            return false;
        }
        ++stats.emitted;
        return fn(const_cast<const std::vector<std::uint64_t>&>(tuple));
    }

    // Can the current block still absorb a pick count of the right parity?
    // `from` is the next candidate index, `even` the parity of the picks so
    // far in this block, `budget` what remains to be picked overall.
    bool feasible(std::size_t bi, std::uint64_t from, bool even, std::uint64_t budget) const {
        std::uint64_t m = grid.blocks_[bi].end - from;
        std::uint64_t later = grid.suffix_max_[bi + 1];
        std::uint64_t lo = budget > later ? budget - later : 0;
        std::uint64_t hi = m < budget ? m : budget;
        if (lo % 2 != (even ? 0u : 1u)) {
            ++lo;
        }
        return lo <= hi;
    }

    // Chooses the picks inside block bi, extensions before closing the block
    // so the emitted tuples stay in lexicographic order within each size.
    bool pick(std::size_t bi, std::uint64_t from, bool even, std::uint64_t budget) {
        if (budget > 0) {
            for (std::uint64_t a = from; a < grid.blocks_[bi].end; ++a) {
                if (!feasible(bi, a + 1, !even, budget - 1)) {
                    break;  // shrinking candidate pool; later a stay infeasible
                }
                tuple.push_back(a);
                bool keep_going = pick(bi, a + 1, !even, budget - 1);
                tuple.pop_back();
                if (!keep_going) {
                    return false;
                }
            }
        }
        if (even && budget <= grid.suffix_max_[bi + 1]) {
            return block(bi + 1, budget);
        }
        return true;
    }

    bool block(std::size_t bi, std::uint64_t budget) {
        if (bi == grid.blocks_.size()) {
            return budget == 0 ? emit() : true;
        }
        return pick(bi, grid.blocks_[bi].begin, true, budget);
    }
};

template <class Fn>
EnumerationStats SubgroupGrid::for_each(std::uint64_t cap, Fn&& fn) const {
    Walk<Fn> walk{*this, fn, cap, {}, {}};
    std::uint64_t max_total = suffix_max_.front();
    for (std::uint64_t k = 0; k <= max_total; k += 2) {
        if (!walk.block(0, k)) {
            break;
        }
    }
    return walk.stats;
}

}  // namespace cantor
