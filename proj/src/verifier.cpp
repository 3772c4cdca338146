#include "cantor/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>

#include "cantor/errors.hpp"
#include "cantor/retraction.hpp"
#include "cantor/subgroup.hpp"

namespace cantor {

namespace gen {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

CantorPoint random_point(std::mt19937_64& rng, int max_word_length, bool allow_twos_tail) {
    std::size_t len = below(rng, static_cast<std::uint64_t>(max_word_length) + 1);
    std::string word;
    word.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        word.push_back(below(rng, 2) ? '2' : '0');
    }
    Tail tail = allow_twos_tail && below(rng, 2) ? Tail::Twos : Tail::Zeros;
    return CantorPoint(std::move(word), tail);
}

// distinct representable points at the given word length: 2^L with zeros
// tails, twice that with both tails
std::uint64_t points_available(int max_word_length, bool allow_twos_tail) {
    std::uint64_t zeros = std::uint64_t{1} << std::min(max_word_length, 40);
    return allow_twos_tail ? 2 * zeros : zeros;
}

GroupElement random_element(std::mt19937_64& rng, int size, int max_word_length,
                            bool allow_twos_tail) {
    std::uint64_t available = points_available(max_word_length, allow_twos_tail);
    if (static_cast<std::uint64_t>(size) > available) {
        size = static_cast<int>(available);
    }
    std::set<CantorPoint> pts;
    int guard = 0;
    while (pts.size() < static_cast<std::size_t>(size)) {
        pts.insert(random_point(rng, max_word_length, allow_twos_tail));
        if (++guard > 1000000) {
            throw Error("cannot draw " + std::to_string(size) + " distinct points at word length " +
                        std::to_string(max_word_length));
        }
    }
    return GroupElement(std::vector<CantorPoint>(pts.begin(), pts.end()));
}

GroupElement random_odd_element(std::mt19937_64& rng, int max_set_size, int max_word_length,
                                bool allow_twos_tail) {
    std::uint64_t options = (static_cast<std::uint64_t>(max_set_size) + 1) / 2;
    int size = 1 + 2 * static_cast<int>(below(rng, options));
    std::uint64_t available = points_available(max_word_length, allow_twos_tail);
    if (static_cast<std::uint64_t>(size) > available) {
        size = static_cast<int>(available % 2 == 0 ? available - 1 : available);
    }
    return random_element(rng, size, max_word_length, allow_twos_tail);
}

Cover random_cover(std::mt19937_64& rng, int max_parts, int max_prefix_length) {
    std::vector<BasicSet> parts{BasicSet()};
    std::size_t target = 1 + below(rng, static_cast<std::uint64_t>(max_parts));
    while (parts.size() < target) {
        std::vector<std::size_t> splittable;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].length() < static_cast<std::size_t>(max_prefix_length)) {
                splittable.push_back(i);
            }
        }
        if (splittable.empty()) {
            break;
        }
        std::size_t i = splittable[below(rng, splittable.size())];
        std::string prefix = parts[i].prefix();
        parts[i] = BasicSet(prefix + '0');
        parts.push_back(BasicSet(prefix + '2'));
    }
    return Cover(std::move(parts));
}

GroupElement random_subgroup_element(std::mt19937_64& rng, const Cover& gamma, int depth) {
    SubgroupGrid grid(gamma, depth);
    std::vector<CantorPoint> pts;
    std::uint64_t start = 0;
    for (const BasicSet& part : gamma.parts()) {
        std::uint64_t width = std::uint64_t{1} << (depth - static_cast<int>(part.length()));
        std::vector<std::uint64_t> chosen;
        for (std::uint64_t i = start; i < start + width; ++i) {
            if (below(rng, 2)) {
                chosen.push_back(i);
            }
        }
        if (chosen.size() % 2 != 0) {
            // toggle the first grid point of the part to restore even parity
            if (!chosen.empty() && chosen.front() == start) {
                chosen.erase(chosen.begin());
            } else {
                chosen.insert(chosen.begin(), start);
            }
        }
        for (std::uint64_t i : chosen) {
            pts.push_back(grid.point(i));
        }
        start += width;
    }
    return GroupElement(std::move(pts));
}

std::vector<CantorPoint> zeros_grid(int depth) {
    std::vector<CantorPoint> out;
    std::uint64_t n = std::uint64_t{1} << depth;
    out.reserve(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        std::string word;
        word.reserve(depth);
        for (int i = depth - 1; i >= 0; --i) {
            word.push_back((v >> i) & 1 ? '2' : '0');
        }
        out.emplace_back(std::move(word), Tail::Zeros);
    }
    return out;
}

}  // namespace gen

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::mt19937_64 suite_rng(const TestCampaign& c, std::string_view id) {
    return std::mt19937_64(c.seed ^ fnv1a(id));
}

// A failing case is re-verified once before being reported.
void check_case(SuiteResult& r, const std::function<bool()>& holds,
                const std::function<std::string()>& describe) {
    if (holds() || holds()) {
        ++r.pass;
        return;
    }
    ++r.fail;
    if (r.counterexamples.size() < 10) {
        r.counterexamples.push_back(describe());
    }
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) {
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

bool witness_invariants(const WitnessReport& r, const GroupElement& f) {
    auto rel = prefix_relation(r.target, r.v_x);
    if (rel != PrefixRelation::Equal && rel != PrefixRelation::UContainsV) {
        return false;
    }
    if (!r.v_x.contains(r.x) || retract(f) != r.x) {
        return false;
    }
    std::size_t inside = 0;
    for (const CantorPoint& p : f) {
        if (r.v_x.contains(p)) {
            ++inside;
        }
    }
    if (inside != 1) {
        return false;
    }
    const auto& parts = r.gamma.parts();
    auto is_part = [&](const BasicSet& u) {
        return std::binary_search(parts.begin(), parts.end(), u);
    };
    if (!is_part(r.v_x)) {
        return false;
    }
    for (const BasicSet& v : r.maximal_even) {
        if (prefix_relation(r.v_x, v) != PrefixRelation::Disjoint || !is_part(v)) {
            return false;
        }
    }
    return true;
}

std::string describe_element_case(const char* label, const GroupElement& f,
                                  const std::function<bool(const GroupElement&)>& fails) {
    GroupElement small = shrink_counterexample(f, fails);
    return std::string(label) + ": f = " + to_string(small);
}

// ---- point and basic-set suites ----

void suite_canonical_idempotent(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 2000; ++n) {
        // raw word, possibly ending in the tail digit
        std::size_t len = gen::below(rng, static_cast<std::uint64_t>(c.max_word_length) + 2);
        std::string raw;
        for (std::size_t i = 0; i < len; ++i) {
            raw.push_back(gen::below(rng, 2) ? '2' : '0');
        }
        Tail tail = gen::below(rng, 2) ? Tail::Twos : Tail::Zeros;
        check_case(
            r,
            [&] {
                CantorPoint p(raw, tail);
                CantorPoint again(p.word(), p.tail());
                bool canonical = p.word().empty() || p.word().back() != static_cast<char>(p.tail());
                return again == p && canonical;
            },
            [&] { return "canonicalization not idempotent for word '" + raw + "'"; });
    }
}

void suite_order_total(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 1200; ++n) {
        CantorPoint a = gen::random_point(rng, c.max_word_length, true);
        CantorPoint b = gen::random_point(rng, c.max_word_length, true);
        CantorPoint x = gen::random_point(rng, c.max_word_length, true);
        check_case(
            r,
            [&] {
                int outcomes = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (a > b ? 1 : 0);
                if (outcomes != 1) {
                    return false;
                }
                if (a <= b && b <= x && !(a <= x)) {
                    return false;
                }
                if (a <= b && b <= a && a != b) {
                    return false;
                }
                return true;
            },
            [&] {
                return "order inconsistency on " + to_string(a) + ", " + to_string(b) + ", " +
                       to_string(x);
            });
    }
}

void suite_tree_property(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    auto random_basic = [&](std::mt19937_64& g) {
        std::size_t len = gen::below(g, static_cast<std::uint64_t>(c.max_word_length) + 2);
        std::string p;
        for (std::size_t i = 0; i < len; ++i) {
            p.push_back(gen::below(g, 2) ? '2' : '0');
        }
        return BasicSet(std::move(p));
    };
    for (int n = 0; n < 1000; ++n) {
        BasicSet u = random_basic(rng);
        BasicSet v = random_basic(rng);
        check_case(
            r,
            [&] {
                bool u_pref = v.prefix().starts_with(u.prefix());
                bool v_pref = u.prefix().starts_with(v.prefix());
                PrefixRelation rel = prefix_relation(u, v);
                PrefixRelation expect = u_pref && v_pref ? PrefixRelation::Equal
                                        : u_pref         ? PrefixRelation::UContainsV
                                        : v_pref         ? PrefixRelation::VContainsU
                                                         : PrefixRelation::Disjoint;
                if (rel != expect) {
                    return false;
                }
                if (rel == PrefixRelation::UContainsV || rel == PrefixRelation::Equal) {
                    // sampled points of v stay in u
                    if (!u.contains(v.left_endpoint()) || !u.contains(v.right_endpoint())) {
                        return false;
                    }
                    std::string ext = v.prefix();
                    for (int i = 0; i < 3; ++i) {
                        ext.push_back(gen::below(rng, 2) ? '2' : '0');
                    }
                    if (!u.contains(CantorPoint(ext, Tail::Zeros))) {
                        return false;
                    }
                }
                return true;
            },
            [&] { return "tree relation broken for " + to_string(u) + ", " + to_string(v); });
    }
}

void suite_endpoint_consistency(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 1000; ++n) {
        std::size_t len = gen::below(rng, static_cast<std::uint64_t>(c.max_word_length) + 2);
        std::string p;
        for (std::size_t i = 0; i < len; ++i) {
            p.push_back(gen::below(rng, 2) ? '2' : '0');
        }
        BasicSet u(p);
        check_case(
            r,
            [&] {
                return u.contains(u.left_endpoint()) && u.contains(u.right_endpoint()) &&
                       u.left_endpoint() <= u.right_endpoint();
            },
            [&] { return "endpoints escape " + to_string(u); });
    }
}

// ---- group suites ----

void suite_group_laws(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 800; ++n) {
        GroupElement a = gen::random_element(
            rng, static_cast<int>(gen::below(rng, c.max_set_size + 1)), c.max_word_length);
        GroupElement b = gen::random_element(
            rng, static_cast<int>(gen::below(rng, c.max_set_size + 1)), c.max_word_length);
        GroupElement x = gen::random_element(
            rng, static_cast<int>(gen::below(rng, c.max_set_size + 1)), c.max_word_length);
        check_case(
            r,
            [&] {
                GroupElement identity;
                return symmetric_difference(symmetric_difference(a, b), x) ==
                           symmetric_difference(a, symmetric_difference(b, x)) &&
                       symmetric_difference(a, b) == symmetric_difference(b, a) &&
                       symmetric_difference(a, identity) == a &&
                       symmetric_difference(a, a) == identity;
            },
            [&] {
                return "group law broken on " + to_string(a) + ", " + to_string(b) + ", " +
                       to_string(x);
            });
    }
}

void suite_subgroup_closure(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 50; ++n) {
        Cover gamma = gen::random_cover(rng, 8, 4);
        std::vector<GroupElement> hs =
            enumerate_subgroup(gamma, c.enum_depth, std::min<std::uint64_t>(c.enum_cap, 48));
        check_case(
            r,
            [&] {
                for (std::size_t i = 0; i < hs.size(); ++i) {
                    for (std::size_t j = i; j < hs.size(); ++j) {
                        if (!in_subgroup(gamma, symmetric_difference(hs[i], hs[j]))) {
                            return false;
                        }
                    }
                }
                return true;
            },
            [&] { return "subgroup not closed for gamma = " + to_string(gamma); });
    }
}

void suite_even_cardinality(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 40; ++n) {
        Cover gamma = gen::random_cover(rng, 8, 4);
        std::vector<GroupElement> hs =
            enumerate_subgroup(gamma, c.enum_depth, std::min<std::uint64_t>(c.enum_cap, 256));
        GroupElement f = gen::random_element(
            rng, static_cast<int>(gen::below(rng, c.max_set_size + 1)), c.max_word_length);
        check_case(
            r,
            [&] {
                for (const GroupElement& h : hs) {
                    if (h.size() % 2 != 0) {
                        return false;
                    }
                }
                for (std::size_t i = 0; i < std::min<std::size_t>(hs.size(), 32); ++i) {
                    if (symmetric_difference(f, hs[i]).odd() != f.odd()) {
                        return false;
                    }
                }
                // contrapositive for arbitrary elements: odd ones stay outside
                return !f.odd() || !in_subgroup(gamma, f);
            },
            [&] { return "odd-cardinality element enumerated for gamma = " + to_string(gamma); });
    }
}

void suite_parity_transfer(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 50; ++n) {
        Cover gamma = gen::random_cover(rng, 8, 4);
        for (int t = 0; t < 100; ++t) {
            GroupElement f = gen::random_element(
                rng, static_cast<int>(gen::below(rng, c.max_set_size + 1)), c.max_word_length);
            GroupElement h = gen::random_subgroup_element(rng, gamma, c.enum_depth);
            const BasicSet& part = gamma.parts()[gen::below(rng, gamma.size())];
            check_case(
                r,
                [&] {
                    bool before = classify(part, f) == Classification::Odd;
                    bool after = classify(part, symmetric_difference(f, h)) == Classification::Odd;
                    return before == after;
                },
                [&] {
                    return "parity not transferred: part = " + to_string(part) +
                           ", f = " + to_string(f) + ", h = " + to_string(h);
                });
        }
    }
}

void suite_cover_completeness(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 150; ++n) {
        Cover gamma = gen::random_cover(rng, 8, 4);
        check_case(
            r,
            [&] {
                std::size_t level = gamma.max_prefix_length();
                std::uint64_t words = std::uint64_t{1} << level;
                for (std::uint64_t w = 0; w < words; ++w) {
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
                    if (owners != 1) {
                        return false;
                    }
                }
                return true;
            },
            [&] { return "completeness broken for gamma = " + to_string(gamma); });
    }
}

void suite_enum_oracle(const TestCampaign& c, SuiteResult& r) {
    (void)c;
    std::vector<Cover> covers;
    covers.push_back(Cover::trivial());
    covers.push_back(Cover({BasicSet("0"), BasicSet("2")}));
    covers.push_back(Cover({BasicSet("0"), BasicSet("20"), BasicSet("22")}));
    covers.push_back(Cover({BasicSet("00"), BasicSet("02"), BasicSet("2")}));
    covers.push_back(Cover({BasicSet("00"), BasicSet("02"), BasicSet("20"), BasicSet("22")}));
    for (int depth = 1; depth <= 2; ++depth) {
        auto grid = gen::zeros_grid(depth);
        for (const Cover& gamma : covers) {
            if (gamma.max_prefix_length() > static_cast<std::size_t>(depth)) {
                continue;
            }
            check_case(
                r,
                [&] {
                    EnumerationStats stats;
                    std::vector<GroupElement> got =
                        enumerate_subgroup(gamma, depth, std::uint64_t{1} << 20, &stats);
                    if (stats.truncated) {
                        return false;
                    }
                    // oracle: filter the full power set, order by (size, lex)
                    std::vector<std::vector<std::size_t>> tuples;
                    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << grid.size()); ++mask) {
                        std::vector<std::size_t> t;
                        std::vector<CantorPoint> pts;
                        for (std::size_t i = 0; i < grid.size(); ++i) {
                            if (mask >> i & 1) {
                                t.push_back(i);
                                pts.push_back(grid[i]);
                            }
                        }
                        if (in_subgroup(gamma, GroupElement(std::move(pts)))) {
                            tuples.push_back(std::move(t));
                        }
                    }
                    std::sort(tuples.begin(), tuples.end(),
                              [](const auto& a, const auto& b) {
                                  if (a.size() != b.size()) {
                                      return a.size() < b.size();
                                  }
                                  return a < b;
                              });
                    if (tuples.size() != got.size()) {
                        return false;
                    }
                    for (std::size_t i = 0; i < tuples.size(); ++i) {
                        std::vector<CantorPoint> pts;
                        for (std::size_t idx : tuples[i]) {
                            pts.push_back(grid[idx]);
                        }
                        if (GroupElement(std::move(pts)) != got[i]) {
                            return false;
                        }
                    }
                    return true;
                },
                [&] {
                    return "enumeration differs from power-set filter for gamma = " +
                           to_string(gamma) + " at depth " + std::to_string(depth);
                });
        }
    }
}

// ---- retraction suites ----

void suite_retraction_identity(const TestCampaign& c, SuiteResult& r) {
    int depth = std::min(c.max_word_length, 6);
    for (const CantorPoint& x : gen::zeros_grid(depth)) {
        check_case(
            r, [&] { return retract(GroupElement({x})) == x; },
            [&] { return "retraction moved the grid point " + to_string(x); });
    }
    // twos-tail points are fixed as well
    std::uint64_t words = std::uint64_t{1} << std::min(c.max_word_length, 6);
    for (std::uint64_t w = 0; w < words; ++w) {
        std::string word;
        for (int i = std::min(c.max_word_length, 6) - 1; i >= 0; --i) {
            word.push_back((w >> i) & 1 ? '2' : '0');
        }
        CantorPoint x(word, Tail::Twos);
        check_case(
            r, [&] { return retract(GroupElement({x})) == x; },
            [&] { return "retraction moved the point " + to_string(x); });
    }
}

void suite_retraction_membership(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 1200; ++n) {
        GroupElement f = gen::random_odd_element(rng, c.max_set_size, c.max_word_length);
        auto fails = [](const GroupElement& g) {
            return g.odd() && !g.contains(retract(g));
        };
        check_case(
            r,
            [&] {
                CantorPoint y = retract(f);
                return f.contains(y) && retract_extended(f) == y;
            },
            [&] { return describe_element_case("retraction left its element", f, fails); });
    }
}

void suite_odd_residue(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 1200; ++n) {
        int size = 1 + static_cast<int>(gen::below(rng, c.max_set_size));
        GroupElement f = gen::random_element(rng, size, c.max_word_length);
        auto fails = [](const GroupElement& g) {
            return !g.empty() && maximal_even_prefixes(g).residue.size() % 2 != g.size() % 2;
        };
        check_case(
            r,
            [&] { return maximal_even_prefixes(f).residue.size() % 2 == f.size() % 2; },
            [&] { return describe_element_case("residue parity broken", f, fails); });
    }
}

void suite_retraction_oracle(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    int depth = c.max_word_length + 2;
    for (int n = 0; n < 600; ++n) {
        GroupElement f = gen::random_odd_element(rng, c.max_set_size, c.max_word_length);
        auto fails = [depth](const GroupElement& g) {
            return g.odd() && retract(g) != brute_force_retract(g, depth);
        };
        check_case(
            r, [&] { return retract(f) == brute_force_retract(f, depth); },
            [&] { return describe_element_case("retraction disagrees with oracle", f, fails); });
    }
}

void suite_maximal_even(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 800; ++n) {
        int size = 1 + static_cast<int>(gen::below(rng, c.max_set_size));
        GroupElement f = gen::random_element(rng, size, c.max_word_length);
        check_case(
            r,
            [&] {
                EvenDecomposition d = maximal_even_prefixes(f);
                for (std::size_t i = 0; i < d.maximal_even.size(); ++i) {
                    if (classify(d.maximal_even[i], f) != Classification::Even) {
                        return false;
                    }
                    for (std::size_t j = i + 1; j < d.maximal_even.size(); ++j) {
                        if (prefix_relation(d.maximal_even[i], d.maximal_even[j]) !=
                            PrefixRelation::Disjoint) {
                            return false;
                        }
                    }
                    // no proper ancestor may be even
                    const std::string& p = d.maximal_even[i].prefix();
                    for (std::size_t len = 0; len < p.size(); ++len) {
                        if (classify(BasicSet(p.substr(0, len)), f) == Classification::Even) {
                            return false;
                        }
                    }
                }
                return true;
            },
            [&] { return "maximality or disjointness broken for f = " + to_string(f); });
    }
}

void suite_even_union(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    int max_len = c.max_word_length + 1;
    for (int n = 0; n < 600; ++n) {
        int size = 1 + static_cast<int>(gen::below(rng, c.max_set_size));
        GroupElement f = gen::random_element(rng, size, c.max_word_length);
        check_case(
            r,
            [&] {
                EvenDecomposition d = maximal_even_prefixes(f);
                for (int len = 0; len <= max_len; ++len) {
                    std::uint64_t words = std::uint64_t{1} << len;
                    for (std::uint64_t w = 0; w < words; ++w) {
                        std::string prefix;
                        for (int i = 0; i < len; ++i) {
                            prefix.push_back((w >> (len - 1 - i)) & 1 ? '2' : '0');
                        }
                        BasicSet u(prefix);
                        if (classify(u, f) != Classification::Even) {
                            continue;
                        }
                        bool covered = false;
                        for (const BasicSet& v : d.maximal_even) {
                            PrefixRelation rel = prefix_relation(v, u);
                            if (rel == PrefixRelation::UContainsV || rel == PrefixRelation::Equal) {
                                covered = true;
                                break;
                            }
                        }
                        if (!covered) {
                            return false;
                        }
                    }
                }
                return true;
            },
            [&] { return "an even basic set escapes the maximal ones for f = " + to_string(f); });
    }
}

// ---- witness suites ----

struct WitnessCase {
    GroupElement f;
    BasicSet u;
};

WitnessCase random_witness_case(std::mt19937_64& rng, const TestCampaign& c) {
    GroupElement f = gen::random_odd_element(rng, c.max_set_size, c.max_word_length);
    CantorPoint x = retract(f);
    std::size_t len = gen::below(rng, static_cast<std::uint64_t>(c.max_word_length) + 1);
    return {std::move(f), BasicSet(x.expansion_prefix(len))};
}

void suite_main_theorem(const TestCampaign& c, SuiteResult& r) {
    // exhaustive core: every odd element of size 1, 3, 5 on the depth-3 grid
    // against every basic neighborhood of its retraction point up to length 3
    auto grid = gen::zeros_grid(3);
    for (std::size_t k : {std::size_t{1}, std::size_t{3}, std::size_t{5}}) {
        for_each_combination(grid.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::vector<CantorPoint> pts;
            for (std::size_t i : idx) {
                pts.push_back(grid[i]);
            }
            GroupElement f(std::move(pts));
            CantorPoint x = retract(f);
            for (std::size_t len = 0; len <= 3; ++len) {
                BasicSet u(x.expansion_prefix(len));
                check_case(
                    r,
                    [&] {
                        WitnessReport report = build_witness(f, u);
                        CheckResult res = verify_witness(report, f, c.enum_depth, c.enum_cap);
                        return witness_invariants(report, f) && res.pass;
                    },
                    [&] {
                        return "witness fails for f = " + to_string(f) + ", u = " + to_string(u);
                    });
            }
        });
    }
    // random cases at the campaign bounds
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 150; ++n) {
        WitnessCase wc = random_witness_case(rng, c);
        check_case(
            r,
            [&] {
                WitnessReport report = build_witness(wc.f, wc.u);
                CheckResult res = verify_witness(report, wc.f, c.enum_depth, c.enum_cap);
                return witness_invariants(report, wc.f) && res.pass;
            },
            [&] { return "witness fails for f = " + to_string(wc.f) + ", u = " + to_string(wc.u); });
    }
}

void suite_leftmost_odd(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 60; ++n) {
        WitnessCase wc = random_witness_case(rng, c);
        check_case(
            r,
            [&] {
                WitnessReport report = build_witness(wc.f, wc.u);
                if (leftmost_odd_part(report.gamma, wc.f) != report.v_x) {
                    return false;
                }
                SubgroupGrid grid(report.gamma, c.enum_depth);
                bool ok = true;
                grid.for_each(150, [&](const std::vector<std::uint64_t>& tuple) {
                    GroupElement g = symmetric_difference(wc.f, grid.element(tuple));
                    if (leftmost_odd_part(report.gamma, g) != report.v_x) {
                        ok = false;
                        return false;
                    }
                    return true;
                });
                return ok;
            },
            [&] {
                return "leftmost odd part is not v_x for f = " + to_string(wc.f) +
                       ", u = " + to_string(wc.u);
            });
    }
}

void suite_vx_parity(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 60; ++n) {
        WitnessCase wc = random_witness_case(rng, c);
        check_case(
            r,
            [&] {
                WitnessReport report = build_witness(wc.f, wc.u);
                SubgroupGrid grid(report.gamma, c.enum_depth);
                bool ok = true;
                grid.for_each(150, [&](const std::vector<std::uint64_t>& tuple) {
                    GroupElement g = symmetric_difference(wc.f, grid.element(tuple));
                    if (classify(report.v_x, g) != Classification::Odd) {
                        ok = false;
                        return false;
                    }
                    return true;
                });
                return ok;
            },
            [&] {
                return "v_x lost oddness for f = " + to_string(wc.f) + ", u = " + to_string(wc.u);
            });
    }
}

void suite_no_even_landing(const TestCampaign& c, SuiteResult& r) {
    auto rng = suite_rng(c, r.id);
    for (int n = 0; n < 60; ++n) {
        WitnessCase wc = random_witness_case(rng, c);
        check_case(
            r,
            [&] {
                WitnessReport report = build_witness(wc.f, wc.u);
                SubgroupGrid grid(report.gamma, c.enum_depth);
                bool ok = true;
                grid.for_each(150, [&](const std::vector<std::uint64_t>& tuple) {
                    GroupElement g = symmetric_difference(wc.f, grid.element(tuple));
                    CantorPoint y = retract(g);
                    if (classify(report.gamma.part_containing(y), g) == Classification::Even) {
                        ok = false;
                        return false;
                    }
                    return true;
                });
                return ok;
            },
            [&] {
                return "retraction landed in an even part for f = " + to_string(wc.f) +
                       ", u = " + to_string(wc.u);
            });
    }
}

struct Suite {
    const char* id;
    void (*run)(const TestCampaign&, SuiteResult&);
};

// kept sorted by id; each entry checks one module-level invariant
constexpr Suite kSuites[] = {
    {"canonical-idempotent", suite_canonical_idempotent},
    {"cover-completeness", suite_cover_completeness},
    {"endpoint-consistency", suite_endpoint_consistency},
    {"enum-oracle", suite_enum_oracle},
    {"even-cardinality", suite_even_cardinality},
    {"even-union", suite_even_union},
    {"group-laws", suite_group_laws},
    {"leftmost-odd", suite_leftmost_odd},
    {"main-theorem", suite_main_theorem},
    {"maximal-even", suite_maximal_even},
    {"no-even-landing", suite_no_even_landing},
    {"odd-residue", suite_odd_residue},
    {"order-total", suite_order_total},
    {"parity-transfer", suite_parity_transfer},
    {"retraction-identity", suite_retraction_identity},
    {"retraction-membership", suite_retraction_membership},
    {"retraction-oracle", suite_retraction_oracle},
    {"subgroup-closure", suite_subgroup_closure},
    {"tree-property", suite_tree_property},
    {"vx-parity", suite_vx_parity},
};

}  // namespace

bool CampaignReport::all_passed() const {
    for (const SuiteResult& s : suites) {
        if (s.fail != 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t CampaignReport::total_checks() const {
    std::uint64_t total = 0;
    for (const SuiteResult& s : suites) {
        total += s.pass + s.fail;
    }
    return total;
}

std::string CampaignReport::machine_format() const {
    std::string out;
    for (const SuiteResult& s : suites) {
        out += s.id + " " + std::to_string(s.pass) + " " + std::to_string(s.fail) + "\n";
    }
    return out;
}

std::string CampaignReport::text_format() const {
    std::string out;
    std::uint64_t failures = 0;
    for (const SuiteResult& s : suites) {
        char line[160];
        std::snprintf(line, sizeof(line), "suite %s: pass=%llu fail=%llu (%.2f ms)\n", s.id.c_str(),
                      static_cast<unsigned long long>(s.pass),
                      static_cast<unsigned long long>(s.fail), s.wall_ms);
        out += line;
        for (const std::string& cx : s.counterexamples) {
            out += "  counterexample: " + cx + "\n";
        }
        failures += s.fail;
    }
    out += "campaign: ";
    out += failures == 0 ? "PASS" : "FAIL";
    out += " (" + std::to_string(suites.size()) + " suites, " + std::to_string(total_checks()) +
           " checks, " + std::to_string(failures) + " failures)\n";
    return out;
}

const std::vector<std::string>& all_suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Suite& s : kSuites) {
            v.emplace_back(s.id);
        }
        return v;
    }();
    return ids;
}

CampaignReport run_campaign(const TestCampaign& c) {
    if (c.max_set_size < 1 || c.max_word_length < 1 || c.enum_depth < 1 || c.enum_cap < 1) {
        throw Error("campaign bounds must be positive");
    }
    std::vector<std::string> selected = c.suites.empty() ? all_suite_ids() : c.suites;
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

    CampaignReport report;
    for (const std::string& id : selected) {
        const Suite* suite = nullptr;
        for (const Suite& s : kSuites) {
            if (id == s.id) {
                suite = &s;
                break;
            }
        }
        if (suite == nullptr) {
            throw Error("unknown suite id: " + id);
        }
        SuiteResult result;
        result.id = id;
        auto start = std::chrono::steady_clock::now();
        suite->run(c, result);
        auto stop = std::chrono::steady_clock::now();
        result.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        report.suites.push_back(std::move(result));
    }
    return report;
}

std::optional<NegativeControl> search_negative_control(const TestCampaign& bound) {
    if (bound.enum_cap == 0 || bound.max_set_size <= 0 || bound.enum_depth <= 0) {
        return std::nullopt;
    }
    int f_depth = std::min(3, bound.enum_depth);
    auto grid = gen::zeros_grid(f_depth);
    Cover gamma = Cover::trivial();
    SubgroupGrid sub(gamma, bound.enum_depth);

    std::optional<NegativeControl> found;
    std::size_t max_size = std::min<std::size_t>(bound.max_set_size, grid.size());
    for (std::size_t k = 1; k <= max_size && !found; k += 2) {
        for_each_combination(grid.size(), k, [&](const std::vector<std::size_t>& idx) {
            if (found) {
                return;
            }
            std::vector<CantorPoint> pts;
            for (std::size_t i : idx) {
                pts.push_back(grid[i]);
            }
            GroupElement f(std::move(pts));
            CantorPoint x = retract(f);
            for (std::size_t len = 1; len <= 3 && !found; ++len) {
                BasicSet u(x.expansion_prefix(len));
                sub.for_each(bound.enum_cap, [&](const std::vector<std::uint64_t>& tuple) {
                    GroupElement h = sub.element(tuple);
                    CantorPoint y = retract(symmetric_difference(f, h));
                    if (!u.contains(y)) {
                        found = NegativeControl{f, u, gamma, std::move(h), std::move(y)};
                        return false;
                    }
                    return true;
                });
            }
        });
    }
    return found;
}

GroupElement shrink_counterexample(GroupElement failing,
                                   const std::function<bool(const GroupElement&)>& fails) {
    bool improved = true;
    while (improved) {
        improved = false;
        const auto& pts = failing.points();
        for (std::size_t i = 0; i < pts.size() && !improved; ++i) {
            std::vector<CantorPoint> smaller;
            for (std::size_t m = 0; m < pts.size(); ++m) {
                if (m != i) {
                    smaller.push_back(pts[m]);
                }
            }
            GroupElement candidate(std::move(smaller));
            if (fails(candidate)) {
                failing = std::move(candidate);
                improved = true;
            }
        }
        if (improved) {
            continue;
        }
        for (std::size_t i = 0; i < pts.size() && !improved; ++i) {
            for (std::size_t j = i + 1; j < pts.size() && !improved; ++j) {
                std::vector<CantorPoint> smaller;
                for (std::size_t m = 0; m < pts.size(); ++m) {
                    if (m != i && m != j) {
                        smaller.push_back(pts[m]);
                    }
                }
                GroupElement candidate(std::move(smaller));
                if (fails(candidate)) {
                    failing = std::move(candidate);
                    improved = true;
                }
            }
        }
    }
    return failing;
}

}  // namespace cantor
