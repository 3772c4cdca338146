#include "doctest.h"

#include <algorithm>
#include <random>

#include "cantor/cover.hpp"
#include "cantor/errors.hpp"
#include "cantor/group_element.hpp"
#include "cantor/subgroup.hpp"
#include "cantor/verifier.hpp"
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

TEST_CASE("symmetric difference") {
    GroupElement x = elem("{02}");
    CHECK(symmetric_difference(x, x) == GroupElement());
    CHECK(symmetric_difference(elem("{0}"), elem("{2}")) == elem("{0, 2}"));
    CHECK(symmetric_difference(elem("{0, 02}"), elem("{02, 2}")) == elem("{0, 2}"));

    SUBCASE("group laws on random triples") {
        std::mt19937_64 rng(201);
        for (int i = 0; i < 500; ++i) {
            GroupElement a = testutil::random_element(rng, rng() % 6, 4, true);
            GroupElement b = testutil::random_element(rng, rng() % 6, 4, true);
            GroupElement c = testutil::random_element(rng, rng() % 6, 4, true);
            CHECK(symmetric_difference(symmetric_difference(a, b), c) ==
                  symmetric_difference(a, symmetric_difference(b, c)));
            CHECK(symmetric_difference(a, b) == symmetric_difference(b, a));
            CHECK(symmetric_difference(a, GroupElement()) == a);
            CHECK(symmetric_difference(a, a) == GroupElement());
        }
    }
}

TEST_CASE("classification of basic sets against elements") {
    CHECK(classify(BasicSet("0"), elem("{2}")) == Classification::Void);
    CHECK(classify(BasicSet("2"), elem("{2, 22}")) == Classification::Even);
    CHECK(classify(BasicSet(), elem("{0, 02, 2}")) == Classification::Odd);
    CHECK(classify(BasicSet("0"), elem("{}")) == Classification::Void);
}

TEST_CASE("cover validation is eager") {
    CHECK_NOTHROW(cover("{0, 2}"));
    CHECK_NOTHROW(cover("{*}"));
    CHECK_NOTHROW(cover("{00, 02, 2}"));
    CHECK_THROWS_AS(cover("{0}"), InvalidCover);          // incomplete
    CHECK_THROWS_AS(cover("{0, 2, 22}"), InvalidCover);   // overlap
    CHECK_THROWS_AS(cover("{*, 0}"), InvalidCover);       // overlap with whole space
    CHECK_THROWS_AS(cover("{0, 0}"), InvalidCover);       // duplicate
    CHECK_THROWS_AS(cover("{}"), InvalidCover);           // nothing covered
    CHECK_THROWS_AS(cover("{00, 22}"), InvalidCover);     // gaps
}

TEST_CASE("subgroup membership") {
    Cover gamma = cover("{0, 2}");
    CHECK(in_subgroup(gamma, elem("{0, 02}")));
    CHECK_FALSE(in_subgroup(gamma, elem("{0, 2}")));
    CHECK(in_subgroup(gamma, elem("{}")));

    SUBCASE("members have even cardinality, whatever their tails") {
        std::mt19937_64 rng(205);
        for (int i = 0; i < 500; ++i) {
            Cover g = gen::random_cover(rng, 6, 3);
            GroupElement f = testutil::random_element(rng, rng() % 9, 4, true);
            if (in_subgroup(g, f)) {
                CHECK(f.size() % 2 == 0);
            }
            if (f.odd()) {
                CHECK_FALSE(in_subgroup(g, f));
            }
        }
    }
}

TEST_CASE("refinement to a cover") {
    CHECK(refine_to_cover({BasicSet("2")}) == cover("{0, 2}"));
    CHECK(refine_to_cover({BasicSet("02")}) == cover("{00, 02, 20, 22}"));
    CHECK(refine_to_cover({}) == cover("{*}"));
    CHECK(refine_to_cover({BasicSet("00"), BasicSet("2")}) == cover("{00, 02, 2}"));
    CHECK_THROWS_AS(refine_to_cover({BasicSet("0"), BasicSet("02")}), NotDisjoint);
}

TEST_CASE("subgroup enumeration order and content") {
    SUBCASE("depth 1 under the split cover admits only the identity") {
        auto hs = enumerate_subgroup(cover("{0, 2}"), 1, 100);
        REQUIRE(hs.size() == 1);
        CHECK(hs[0] == GroupElement());
    }

    SUBCASE("depth 2 under the split cover, frozen order") {
        auto hs = enumerate_subgroup(cover("{0, 2}"), 2, 100);
        REQUIRE(hs.size() == 4);
        CHECK(hs[0] == elem("{}"));
        CHECK(hs[1] == elem("{0, 02}"));
        CHECK(hs[2] == elem("{2, 22}"));
        CHECK(hs[3] == elem("{0, 02, 2, 22}"));
    }

    SUBCASE("trivial cover at depth 1 gives the even subsets") {
        auto hs = enumerate_subgroup(Cover::trivial(), 1, 100);
        REQUIRE(hs.size() == 2);
        CHECK(hs[0] == elem("{}"));
        CHECK(hs[1] == elem("{0, 2}"));
    }

    SUBCASE("cap of one returns exactly the identity and reports truncation") {
        EnumerationStats stats;
        auto hs = enumerate_subgroup(Cover::trivial(), 2, 1, &stats);
        REQUIRE(hs.size() == 1);
        CHECK(hs[0] == GroupElement());
        CHECK(stats.truncated);
    }

    SUBCASE("matches the power-set filter exhaustively at depths 1 and 2") {
        std::vector<Cover> covers;
        covers.push_back(Cover::trivial());
        covers.push_back(cover("{0, 2}"));
        covers.push_back(cover("{0, 20, 22}"));
        covers.push_back(cover("{00, 02, 2}"));
        covers.push_back(cover("{00, 02, 20, 22}"));
        for (int depth = 1; depth <= 2; ++depth) {
            auto grid = gen::zeros_grid(depth);
            for (const Cover& gamma : covers) {
                if (gamma.max_prefix_length() > static_cast<std::size_t>(depth)) {
                    continue;
                }
                EnumerationStats stats;
                auto got = enumerate_subgroup(gamma, depth, 1 << 20, &stats);
                CHECK_FALSE(stats.truncated);

                std::vector<std::vector<std::size_t>> expect;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << grid.size()); ++mask) {
                    std::vector<std::size_t> tuple;
                    std::vector<CantorPoint> pts;
                    for (std::size_t i = 0; i < grid.size(); ++i) {
                        if (mask >> i & 1) {
                            tuple.push_back(i);
                            pts.push_back(grid[i]);
                        }
                    }
                    if (in_subgroup(gamma, GroupElement(std::move(pts)))) {
                        expect.push_back(std::move(tuple));
                    }
                }
                std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) {
                    return a.size() != b.size() ? a.size() < b.size() : a < b;
                });
                REQUIRE(got.size() == expect.size());
                for (std::size_t i = 0; i < got.size(); ++i) {
                    std::vector<CantorPoint> pts;
                    for (std::size_t idx : expect[i]) {
                        pts.push_back(grid[idx]);
                    }
                    CHECK(got[i] == GroupElement(std::move(pts)));
                }
            }
        }
    }

    SUBCASE("depth below the cover's prefix length is rejected") {
        CHECK_THROWS_AS(enumerate_subgroup(cover("{00, 02, 2}"), 1, 100), DepthTooSmall);
        CHECK_THROWS_AS(enumerate_subgroup(cover("{0, 2}"), 0, 100), DepthTooSmall);
    }
}

TEST_CASE("subgroup closure and parity invariants on random covers") {
    std::mt19937_64 rng(202);
    for (int n = 0; n < 25; ++n) {
        Cover gamma = gen::random_cover(rng, 8, 3);
        int depth = 4;
        auto hs = enumerate_subgroup(gamma, depth, 40);
        for (const GroupElement& h : hs) {
            CHECK(h.size() % 2 == 0);
            CHECK(in_subgroup(gamma, h));
        }
        for (std::size_t i = 0; i < hs.size(); i += 5) {
            for (std::size_t j = i; j < hs.size(); j += 7) {
                CHECK(in_subgroup(gamma, symmetric_difference(hs[i], hs[j])));
            }
        }
        // parity transfer across a random subgroup element
        for (int t = 0; t < 20; ++t) {
            GroupElement f = testutil::random_element(rng, rng() % 6, 4, false);
            GroupElement h = gen::random_subgroup_element(rng, gamma, depth);
            REQUIRE(in_subgroup(gamma, h));
            for (const BasicSet& part : gamma.parts()) {
                bool before = classify(part, f) == Classification::Odd;
                bool after =
                    classify(part, symmetric_difference(f, h)) == Classification::Odd;
                CHECK(before == after);
            }
        }
    }
}

TEST_CASE("cover completeness, brute force") {
    std::mt19937_64 rng(203);
    for (int n = 0; n < 50; ++n) {
        Cover gamma = gen::random_cover(rng, 8, 4);
        std::size_t level = gamma.max_prefix_length();
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << level); ++w) {
            std::string word;
            for (std::size_t i = 0; i < level; ++i) {
                word.push_back((w >> (level - 1 - i)) & 1 ? '2' : '0');
            }
            std::size_t owners = 0;
            for (const BasicSet& u : gamma.parts()) {
                if (word.starts_with(u.prefix())) {
                    ++owners;
                }
            }
            CHECK(owners == 1);
        }
    }
}

TEST_CASE("group element text format") {
    CHECK(to_string(elem("{0, 2, 22}")) == "{0, 2, 22}");
    CHECK(to_string(elem("{}")) == "{}");
    CHECK(elem("{22, 0}") == elem("{0, 22}"));  // parser sorts
    CHECK_THROWS_AS(elem("{0, 0}"), ParseError);
    CHECK_THROWS_AS(elem("{2, 20}"), ParseError);  // same point twice after canonicalization
    CHECK_THROWS_AS(elem("{0, 2"), ParseError);
    CHECK_THROWS_AS(elem("0, 2}"), ParseError);

    CHECK(to_string(cover("{2, 0}")) == "{0, 2}");
    CHECK(to_string(Cover::trivial()) == "{*}");

    SUBCASE("round trip") {
        std::mt19937_64 rng(204);
        for (int i = 0; i < 300; ++i) {
            GroupElement f = testutil::random_element(rng, rng() % 8, 5, true);
            CHECK(parse_group_element(to_string(f)) == f);
        }
        for (int i = 0; i < 100; ++i) {
            Cover gamma = gen::random_cover(rng, 8, 4);
            CHECK(parse_cover(to_string(gamma)) == gamma);
        }
    }
}
