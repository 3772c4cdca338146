#include "doctest.h"

#include <bit>
#include <random>

#include "cantor/errors.hpp"
#include "cantor/subgroup.hpp"
#include "cantor/verifier.hpp"
#include "cantor/witness.hpp"
#include "test_util.hpp"

using namespace cantor;

namespace {

GroupElement elem(const char* text) {
    return parse_group_element(text);
}

Cover cover(const char* text) {
    return parse_cover(text);
}

}  // namespace

TEST_CASE("witness construction") {
    SUBCASE("singleton takes the target itself") {
        WitnessReport r = build_witness(elem("{2}"), BasicSet("2"));
        CHECK(r.x == parse_point("2"));
        CHECK(r.maximal_even.empty());
        CHECK(r.v_x == BasicSet("2"));
        CHECK(r.gamma == cover("{0, 2}"));
    }

    SUBCASE("even pair forces a separating neighborhood") {
        WitnessReport r = build_witness(elem("{0, 2, 22}"), BasicSet());
        CHECK(r.x == parse_point("0"));
        REQUIRE(r.maximal_even.size() == 1);
        CHECK(r.maximal_even[0] == BasicSet("2"));
        CHECK(r.v_x == BasicSet("0"));
        CHECK(r.gamma == cover("{0, 2}"));
    }

    SUBCASE("retraction point on the right") {
        WitnessReport r = build_witness(elem("{0, 02, 2}"), BasicSet("2"));
        CHECK(r.x == parse_point("2"));
        REQUIRE(r.maximal_even.size() == 1);
        CHECK(r.maximal_even[0] == BasicSet("0"));
        CHECK(r.v_x == BasicSet("2"));
        CHECK(r.gamma == cover("{0, 2}"));
    }

    SUBCASE("preconditions") {
        CHECK_THROWS_AS(build_witness(elem("{0, 2}"), BasicSet()), EvenCardinality);
        CHECK_THROWS_AS(build_witness(elem("{0, 2, 22}"), BasicSet("2")), NotNeighborhood);
    }

    SUBCASE("v_x can reach into the tail digits of x") {
        // x = 0 survives beside companions under "0", so v_x = "00" uses the
        // second expansion digit even though x's word is empty
        GroupElement f = elem("{0, 02, 022, 2, 22}");
        WitnessReport r = build_witness(f, BasicSet("0"));
        CHECK(r.x == CantorPoint());
        REQUIRE(r.maximal_even.size() == 2);
        CHECK(r.maximal_even[0] == BasicSet("02"));
        CHECK(r.maximal_even[1] == BasicSet("2"));
        CHECK(r.v_x == BasicSet("00"));
        CHECK(r.gamma == cover("{00, 02, 2}"));
        CHECK(verify_witness(r, f, 4, 50000).pass);
    }

    SUBCASE("v_x must sometimes outgrow the target prefix") {
        // the pair {0, 002} is evenly covered at "00", leaving x = 02; all of
        // f sits inside the target "0", so v_x needs a second digit
        WitnessReport r = build_witness(elem("{0, 002, 02}"), BasicSet("0"));
        CHECK(r.x == parse_point("02"));
        REQUIRE(r.maximal_even.size() == 1);
        CHECK(r.maximal_even[0] == BasicSet("00"));
        CHECK(r.v_x == BasicSet("02"));
        CHECK(r.gamma == cover("{00, 02, 20, 22}"));
        CHECK(classify(r.v_x, elem("{0, 002, 02}")) == Classification::Odd);
    }
}

TEST_CASE("leftmost odd part") {
    CHECK(leftmost_odd_part(cover("{0, 2}"), elem("{0, 2, 22}")) == BasicSet("0"));
    CHECK(leftmost_odd_part(cover("{0, 2}"), elem("{2}")) == BasicSet("2"));
    CHECK(leftmost_odd_part(cover("{00, 02, 2}"), elem("{02, 2, 22}")) == BasicSet("02"));
    CHECK_THROWS_AS(leftmost_odd_part(cover("{0, 2}"), elem("{0, 02}")), NoOddPart);
}

TEST_CASE("witness verification passes on built witnesses") {
    SUBCASE("singleton") {
        WitnessReport r = build_witness(elem("{2}"), BasicSet("2"));
        CheckResult res = verify_witness(r, elem("{2}"), 2, 100000);
        CHECK(res.pass);
        CHECK_FALSE(res.truncated);
        CHECK(res.checked == 4);  // even subsets of two blocks of two grid points
    }

    SUBCASE("cancellation inside the even part") {
        GroupElement f = elem("{0, 2, 22}");
        WitnessReport r = build_witness(f, BasicSet());
        CheckResult res = verify_witness(r, f, 3, 100000);
        CHECK(res.pass);
        CHECK_FALSE(res.truncated);
    }

    SUBCASE("default depth and cap") {
        GroupElement f = elem("{0, 02, 2}");
        WitnessReport r = build_witness(f, BasicSet("2"));
        CheckResult res = verify_witness(r, f);
        CHECK(res.pass);
    }

    SUBCASE("depth below the cover is rejected") {
        GroupElement f = elem("{0, 002, 02}");
        WitnessReport r = build_witness(f, BasicSet("0"));  // gamma reaches length 2
        CHECK_THROWS_AS(verify_witness(r, f, 1, 100), DepthTooSmall);
    }
}

TEST_CASE("corrupted cover is caught with the first counterexample") {
    GroupElement f = elem("{0, 02, 2}");
    WitnessReport corrupted{parse_point("2"), BasicSet("2"), {BasicSet("0")}, Cover::trivial(),
                            BasicSet("2")};
    CheckResult res = verify_witness(corrupted, f, 3, 100000);
    REQUIRE_FALSE(res.pass);
    // enumeration order scans {}, {0,002}, {0,02}, {0,022}, then {0,2},
    // whose perturbation retracts to 02 outside v_x
    CHECK(*res.counterexample == elem("{0, 2}"));
    CHECK(*res.image == parse_point("02"));
}

TEST_CASE("fast and general verification agree") {
    SUBCASE("on a passing witness") {
        GroupElement f = elem("{0, 2, 22}");
        WitnessReport r = build_witness(f, BasicSet());
        CheckResult fast = verify_witness(r, f, 4, 500);

        EnumerationStats stats;
        auto hs = enumerate_subgroup(r.gamma, 4, 500, &stats);
        std::uint64_t manual_checked = 0;
        bool manual_pass = true;
        for (const GroupElement& h : hs) {
            ++manual_checked;
            if (!r.v_x.contains(retract(symmetric_difference(f, h)))) {
                manual_pass = false;
                break;
            }
        }
        CHECK(fast.pass == manual_pass);
        CHECK(fast.checked == manual_checked);
        CHECK(fast.truncated == stats.truncated);
    }

    SUBCASE("on the corrupted cover") {
        GroupElement f = elem("{0, 02, 2}");
        WitnessReport corrupted{parse_point("2"), BasicSet("2"), {BasicSet("0")},
                                Cover::trivial(), BasicSet("2")};
        CheckResult fast = verify_witness(corrupted, f, 3, 100000);

        auto hs = enumerate_subgroup(corrupted.gamma, 3, 100000);
        std::optional<GroupElement> manual_cx;
        for (const GroupElement& h : hs) {
            if (!corrupted.v_x.contains(retract(symmetric_difference(f, h)))) {
                manual_cx = h;
                break;
            }
        }
        REQUIRE(manual_cx.has_value());
        CHECK(*fast.counterexample == *manual_cx);
    }

    SUBCASE("points off the grid use the general path") {
        GroupElement f = GroupElement({CantorPoint("0", Tail::Twos), parse_point("2"),
                                       parse_point("22")});
        WitnessReport r = build_witness(f, BasicSet());
        CheckResult res = verify_witness(r, f, 4, 2000);
        CHECK(res.pass);
    }

    SUBCASE("depths beyond the mask width use the general path") {
        GroupElement f = elem("{2}");
        WitnessReport r = build_witness(f, BasicSet("2"));
        CheckResult deep = verify_witness(r, f, 7, 300);
        CHECK(deep.pass);
        CHECK(deep.truncated);
        CHECK(deep.checked == 300);
    }
}

TEST_CASE("grid retraction agrees with the general walk") {
    std::mt19937_64 rng(401);
    for (int depth = 1; depth <= 6; ++depth) {
        auto grid = gen::zeros_grid(depth);
        for (int i = 0; i < 300; ++i) {
            std::uint64_t mask = rng();
            if (depth < 6) {
                mask &= (std::uint64_t{1} << (1 << depth)) - 1;
            }
            if (std::popcount(mask) % 2 == 0) {
                mask ^= 1;  // force odd cardinality
            }
            std::vector<CantorPoint> pts;
            for (std::size_t b = 0; b < grid.size(); ++b) {
                if (mask >> b & 1) {
                    pts.push_back(grid[b]);
                }
            }
            GroupElement f(std::move(pts));
            int idx = detail::grid_retract_index(mask, depth);
            REQUIRE(idx >= 0);
            CHECK(grid[static_cast<std::size_t>(idx)] == retract(f));
        }
    }
}

TEST_CASE("subspace embedding") {
    SUBCASE("a genuine part keeps singleton perturbations inside") {
        CheckResult res =
            check_subspace_embedding(parse_point("2"), BasicSet("2"), cover("{0, 2}"), 2);
        CHECK(res.pass);
    }

    SUBCASE("identity perturbation is covered") {
        CheckResult res =
            check_subspace_embedding(parse_point("0"), BasicSet("0"), cover("{0, 2}"), 1);
        CHECK(res.pass);
    }

    SUBCASE("the trivial cover fails to embed") {
        CheckResult res =
            check_subspace_embedding(parse_point("0"), BasicSet("0"), Cover::trivial(), 1);
        REQUIRE_FALSE(res.pass);
        CHECK(*res.counterexample == elem("{0, 2}"));
        CHECK(*res.image == parse_point("2"));
    }

    SUBCASE("off-grid point takes the general path") {
        CantorPoint one("", Tail::Twos);
        CheckResult res = check_subspace_embedding(one, BasicSet("2"), cover("{0, 2}"), 2);
        CHECK(res.pass);
    }
}

TEST_CASE("witness stability invariants on random cases") {
    std::mt19937_64 rng(402);
    for (int n = 0; n < 40; ++n) {
        int size = 1 + 2 * static_cast<int>(rng() % 3);
        GroupElement f = testutil::random_element(rng, size, 4, false);
        CantorPoint x = retract(f);
        BasicSet u(x.expansion_prefix(rng() % 4));
        WitnessReport r = build_witness(f, u);

        CHECK(leftmost_odd_part(r.gamma, f) == r.v_x);

        SubgroupGrid grid(r.gamma, 5);
        grid.for_each(120, [&](const std::vector<std::uint64_t>& tuple) {
            GroupElement g = symmetric_difference(f, grid.element(tuple));
            CHECK(leftmost_odd_part(r.gamma, g) == r.v_x);
            CHECK(classify(r.v_x, g) == Classification::Odd);
            CantorPoint y = retract(g);
            CHECK(classify(r.gamma.part_containing(y), g) != Classification::Even);
            CHECK(r.v_x.contains(y));
            return true;
        });
    }
}
