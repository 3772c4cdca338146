#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cantor/cover.hpp"
#include "cantor/witness.hpp"

namespace cantor {

// Bounds and seed for one deterministic batch of property suites. The seed
// fully determines every generated case.
struct TestCampaign {
    std::uint64_t seed = 42;
    int max_set_size = 7;      // element sizes; retraction suites draw odd sizes in [1, max]
    int max_word_length = 4;   // point word lengths in [0, max]
    int enum_depth = 6;        // grid depth for subgroup enumeration
    std::uint64_t enum_cap = 20000;  // per-case enumeration cap
    std::vector<std::string> suites;  // empty = every suite
};

struct SuiteResult {
    std::string id;
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::vector<std::string> counterexamples;  // confirmed failures, shrunk where possible
    double wall_ms = 0.0;
};

struct CampaignReport {
    std::vector<SuiteResult> suites;  // ordered by suite id

    bool all_passed() const;
    std::uint64_t total_checks() const;

    // One line per suite: "<id> <pass> <fail>". Identical runs of the same
    // campaign produce byte-identical output (no wall-clock fields).
    std::string machine_format() const;
    std::string text_format() const;
};

// Every suite identifier, sorted. Each one checks one module-level invariant.
const std::vector<std::string>& all_suite_ids();

// Runs the selected suites (all of them when the list is empty), each seeded
// independently from the campaign seed. Failing cases are re-verified once
// before being reported. Unknown suite ids and non-positive bounds throw
// Error; precondition violations inside suites (e.g. an enumeration depth
// below a cover's prefix length) propagate.
CampaignReport run_campaign(const TestCampaign& c);

// A demonstration that the witness cover's parity constraints matter: a
// valid cover not produced by build_witness (the trivial one), an element f,
// a neighborhood u of retract(f), and an H in the cover's subgroup whose
// perturbation pushes the retraction outside u.
struct NegativeControl {
    GroupElement f;
    BasicSet u;
    Cover gamma;
    GroupElement h;
    CantorPoint image;  // retract(f + h), outside u
};

// Deterministic scan over small odd elements and neighborhoods of their
// retraction points. Returns the first quadruple found, or nothing when the
// bounds are empty or the scan is exhausted.
std::optional<NegativeControl> search_negative_control(const TestCampaign& bound);

// Greedy shrinking: repeatedly drops one point (or a pair, to preserve
// parity) while the predicate keeps failing. The predicate must return true
// exactly on failing inputs.
GroupElement shrink_counterexample(GroupElement failing,
                                   const std::function<bool(const GroupElement&)>& fails);

// Deterministic case generators shared by the suites and external drivers.
namespace gen {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n);  // uniform in [0, n)

// Word length uniform in [0, max_word_length], digits uniform. Tail is zeros
// unless allow_twos_tail, keeping generated points on the enumeration grid.
CantorPoint random_point(std::mt19937_64& rng, int max_word_length, bool allow_twos_tail = false);

// Sizes are clamped to the number of distinct representable points.
GroupElement random_element(std::mt19937_64& rng, int size, int max_word_length,
                            bool allow_twos_tail = false);

// Size uniform over the odd numbers in [1, max_set_size], clamped likewise.
GroupElement random_odd_element(std::mt19937_64& rng, int max_set_size, int max_word_length,
                                bool allow_twos_tail = false);

// Built by repeatedly splitting a random part in two, so always valid.
// At most max_parts parts, prefixes no longer than max_prefix_length.
Cover random_cover(std::mt19937_64& rng, int max_parts, int max_prefix_length);

// A random element of H_gamma on the depth grid: an even-size subset of
// every part's grid points.
GroupElement random_subgroup_element(std::mt19937_64& rng, const Cover& gamma, int depth);

// The 2^depth grid points { w000... : |w| = depth }, ascending.
std::vector<CantorPoint> zeros_grid(int depth);

}  // namespace gen

}  // namespace cantor
