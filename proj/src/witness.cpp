#include "cantor/witness.hpp"

#include <algorithm>
#include <bit>

#include "cantor/errors.hpp"
#include "cantor/subgroup.hpp"

namespace cantor {

namespace detail {

// Minimum surviving grid index of the point set encoded by mask, walking the
// perfect prefix tree over [0, 2^depth): an even occupied node discards its
// range, a single point survives, an odd node has exactly one odd child.
// Returns -1 when nothing survives (even cardinality input).
int grid_retract_index(std::uint64_t mask, int lo, int size) {
    std::uint64_t range = size == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1) << lo;
    int count = std::popcount(mask & range);
    if (count == 0 || count % 2 == 0) {
        return -1;
    }
    if (count == 1) {
        return std::countr_zero(mask & range);
    }
    int half = size / 2;
    int left = grid_retract_index(mask, lo, half);
    return left >= 0 ? left : grid_retract_index(mask, lo + half, half);
}

int grid_retract_index(std::uint64_t mask, int depth) {
    return grid_retract_index(mask, 0, 1 << depth);
}

}  // namespace detail

WitnessReport build_witness(const GroupElement& f, const BasicSet& u) {
    if (!f.odd()) {
        throw EvenCardinality("witnesses exist only for elements of odd cardinality");
    }
    EvenDecomposition d = maximal_even_prefixes(f);
    CantorPoint x = d.residue.points().front();
    if (!u.contains(x)) {
        throw NotNeighborhood(to_string(u) + " does not contain the retraction point " + to_string(x));
    }
    // Scan the prefixes of x's expansion, shortest first. A prefix at least
    // as long as the separation depth isolates x within f and is then
    // automatically incomparable with every maximal even set, so the scan
    // terminates by that length.
    std::size_t limit = std::max(u.length(), static_cast<std::size_t>(separation_depth(f)));
    std::optional<BasicSet> chosen;
    for (std::size_t len = u.length(); len <= limit; ++len) {
        BasicSet candidate(x.expansion_prefix(len));
        std::size_t inside = 0;
        for (const CantorPoint& p : f) {
            if (candidate.contains(p)) {
                ++inside;
            }
        }
        if (inside != 1) {
            continue;
        }
        bool clear = true;
        for (const BasicSet& v : d.maximal_even) {
            if (prefix_relation(candidate, v) != PrefixRelation::Disjoint) {
                clear = false;
                break;
            }
        }
        if (clear) {
            chosen = std::move(candidate);
            break;
        }
    }
    if (!chosen) {
        throw Error("internal: no qualifying neighborhood prefix found");
    }
    std::vector<BasicSet> special = d.maximal_even;
    special.push_back(*chosen);
    Cover gamma = refine_to_cover(special);
    return WitnessReport{std::move(x), std::move(*chosen), std::move(d.maximal_even),
                         std::move(gamma), u};
}

BasicSet leftmost_odd_part(const Cover& gamma, const GroupElement& f) {
    for (const BasicSet& u : gamma.parts()) {
        if (classify(u, f) == Classification::Odd) {
            return u;
        }
    }
    throw NoOddPart("every part of " + to_string(gamma) + " meets the element evenly or not at all");
}

namespace {

CheckResult verify_fast(const SubgroupGrid& grid, std::uint64_t f_mask, std::uint64_t v_mask,
                        std::uint64_t cap) {
    CheckResult result;
    EnumerationStats stats = grid.for_each(cap, [&](const std::vector<std::uint64_t>& tuple) {
        std::uint64_t h = grid.bit_mask(tuple);
        int y = detail::grid_retract_index(f_mask ^ h, grid.depth());
        if ((v_mask >> y & 1) == 0) {
            result.pass = false;
            result.counterexample = grid.element(tuple);
            result.image = grid.point(static_cast<std::uint64_t>(y));
            return false;
        }
        return true;
    });
    result.checked = stats.emitted;
    result.truncated = stats.truncated;
    return result;
}

CheckResult verify_general(const SubgroupGrid& grid, const GroupElement& f, const BasicSet& v_x,
                           std::uint64_t cap) {
    CheckResult result;
    EnumerationStats stats = grid.for_each(cap, [&](const std::vector<std::uint64_t>& tuple) {
        GroupElement h = grid.element(tuple);
        CantorPoint y = retract(symmetric_difference(f, h));
        if (!v_x.contains(y)) {
            result.pass = false;
            result.counterexample = std::move(h);
            result.image = std::move(y);
            return false;
        }
        return true;
    });
    result.checked = stats.emitted;
    result.truncated = stats.truncated;
    return result;
}

}  // namespace

CheckResult verify_witness(const WitnessReport& report, const GroupElement& f, int depth,
                           std::uint64_t cap) {
    if (!f.odd()) {
        throw EvenCardinality("witness verification needs an element of odd cardinality");
    }
    SubgroupGrid grid(report.gamma, depth);
    if (depth <= 6) {
        if (auto f_mask = grid.bit_mask(f)) {
            return verify_fast(grid, *f_mask, grid.set_mask(report.v_x), cap);
        }
    }
    return verify_general(grid, f, report.v_x, cap);
}

CheckResult verify_witness(const WitnessReport& report, const GroupElement& f) {
    int depth = static_cast<int>(report.gamma.max_prefix_length()) + 2;
    return verify_witness(report, f, depth, 200000);
}

CheckResult check_subspace_embedding(const CantorPoint& x, const BasicSet& v_x, const Cover& gamma,
                                     int depth, std::uint64_t cap) {
    // Deliberately no validation: the sweep is total, and a cover that fails
    // to hold v_x as a part simply produces a counterexample.
    SubgroupGrid grid(gamma, depth);
    CheckResult result;
    const GroupElement x_single(std::vector<CantorPoint>{x});

    std::optional<std::uint64_t> x_idx;
    if (depth <= 6) {
        x_idx = grid.index_of(x);
    }
    EnumerationStats stats;
    if (x_idx) {
        std::uint64_t x_mask = std::uint64_t{1} << *x_idx;
        std::uint64_t v_mask = grid.set_mask(v_x);
        stats = grid.for_each(cap, [&](const std::vector<std::uint64_t>& tuple) {
            std::uint64_t s = x_mask ^ grid.bit_mask(tuple);
            if (std::popcount(s) == 1) {
                int y = std::countr_zero(s);
                if ((v_mask >> y & 1) == 0) {
                    result.pass = false;
                    result.counterexample = grid.element(tuple);
                    result.image = grid.point(static_cast<std::uint64_t>(y));
                    return false;
                }
            }
            return true;
        });
    } else {
        stats = grid.for_each(cap, [&](const std::vector<std::uint64_t>& tuple) {
            GroupElement s = symmetric_difference(x_single, grid.element(tuple));
            if (s.size() == 1 && !v_x.contains(s.points().front())) {
                result.pass = false;
                result.counterexample = grid.element(tuple);
                result.image = s.points().front();
                return false;
            }
            return true;
        });
    }
    result.checked = stats.emitted;
    result.truncated = stats.truncated;
    return result;
}

std::string to_string(const WitnessReport& report) {
    std::string out;
    out += "x = " + to_string(report.x) + "\n";
    out += "v_x = " + to_string(report.v_x) + "\n";
    out += "maximal_even = {";
    bool first = true;
    for (const BasicSet& u : report.maximal_even) {
        if (!first) {
            out += ", ";
        }
        out += to_string(u);
        first = false;
    }
    out += "}\n";
    out += "gamma = " + to_string(report.gamma) + "\n";
    out += "target = " + to_string(report.target) + "\n";
    return out;
}

}  // namespace cantor
