#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantor/cover.hpp"
#include "cantor/retraction.hpp"

namespace cantor {

// The data certifying continuity of the retraction at f for one basic
// neighborhood request: x = retract(f), a basic neighborhood v_x of x inside
// the target that meets f only in x and avoids every maximal even set, and
// the cover gamma built from those pieces. The parity subgroup H_gamma then
// satisfies retract(f + H_gamma) subset of v_x.
struct WitnessReport {
    CantorPoint x;
    BasicSet v_x;
    std::vector<BasicSet> maximal_even;
    Cover gamma;
    BasicSet target;
};

// Constructs the witness: v_x is the shortest prefix of x's expansion that
// extends the target prefix, contains no point of f other than x, and is
// disjoint from every maximal even set; gamma completes those parts to a
// cover. Throws EvenCardinality, and NotNeighborhood when the target does
// not contain retract(f).
WitnessReport build_witness(const GroupElement& f, const BasicSet& u);

// The part of gamma with the least left endpoint among those meeting f in an
// odd number of points. Throws NoOddPart if there is none.
BasicSet leftmost_odd_part(const Cover& gamma, const GroupElement& f);

// Outcome of a bounded verification sweep over the enumerated subgroup.
struct CheckResult {
    bool pass = true;
    std::optional<GroupElement> counterexample;  // first H breaking containment
    std::optional<CantorPoint> image;            // where the broken case landed
    std::uint64_t checked = 0;
    bool truncated = false;  // enumeration hit the cap before running out
};

// Checks retract(f + H) in v_x for every enumerated H in H_gamma, in
// enumeration order, stopping at the first counterexample. Throws
// DepthTooSmall if depth is below gamma's prefix length.
CheckResult verify_witness(const WitnessReport& report, const GroupElement& f, int depth,
                           std::uint64_t cap);

// Defaults: depth = gamma prefix length + 2, cap = 200000.
CheckResult verify_witness(const WitnessReport& report, const GroupElement& f);

// Checks the subspace embedding ({x} + H_gamma) with C stays inside v_x:
// whenever {x} + H is a singleton {y}, y must lie in v_x. The cover must
// contain v_x as a part and v_x must contain x.
CheckResult check_subspace_embedding(const CantorPoint& x, const BasicSet& v_x, const Cover& gamma,
                                     int depth, std::uint64_t cap = 200000);

// Multi-line block listing x, v_x, the maximal even sets, gamma, and target.
std::string to_string(const WitnessReport& report);

namespace detail {

// Minimum surviving index of the odd-cardinality point set encoded by mask
// over the depth-d grid (depth <= 6), by the same discarding rule as retract.
int grid_retract_index(std::uint64_t mask, int depth);

}  // namespace detail

}  // namespace cantor
