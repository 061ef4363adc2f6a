#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "lklab/errors.hpp"
#include "lklab/setkit.hpp"

using namespace lklab;

namespace {

// independent factorial-arithmetic oracle for binomial counts
unsigned long long binom_by_factorials(int n, int k)
{
    unsigned long long fn = 1, fk = 1, fnk = 1;
    for (int i = 2; i <= n; ++i)
        fn *= static_cast<unsigned long long>(i);
    for (int i = 2; i <= k; ++i)
        fk *= static_cast<unsigned long long>(i);
    for (int i = 2; i <= n - k; ++i)
        fnk *= static_cast<unsigned long long>(i);
    return fn / (fk * fnk);
}

} // namespace

TEST_CASE("[setkit] binomials match factorial arithmetic")
{
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binom(n, k) == binom_by_factorials(n, k));
    CHECK(binom(5, 7) == 0);
    CHECK(binom(64, 32) == 1832624140942590534ULL);
}

TEST_CASE("[setkit] subset basics and ground cap")
{
    Subset s = Subset::of(5, { 2, 4, 5 });
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
    CHECK(s.min_element() == 2);
    CHECK(s.max_element() == 5);
    CHECK(s.members() == std::vector<int> { 2, 4, 5 });
    CHECK(to_braced_string(s) == "{2,4,5}");
    CHECK(to_braced_string(Subset::empty(3)) == "{}");
    CHECK_THROWS_AS(Subset::empty(65), InvalidParameters);
    CHECK_THROWS_AS(Subset::empty(5).with(6), InvalidParameters);
    CHECK_THROWS_AS(Subset::empty(4).min_element(), InvalidInput);
}

TEST_CASE("[setkit] braced subset parsing round-trips and rejects junk")
{
    for (const char* text : { "{}", "{1}", "{1,2,5}", "{3,7,8}" }) {
        Subset s = parse_braced_subset(8, text);
        CHECK(to_braced_string(s) == text);
    }
    CHECK_THROWS_AS(parse_braced_subset(8, "1,2"), SchemaError);
    CHECK_THROWS_AS(parse_braced_subset(8, "{2,1}"), SchemaError);
    CHECK_THROWS_AS(parse_braced_subset(8, "{1,1}"), SchemaError);
    CHECK_THROWS_AS(parse_braced_subset(8, "{1,9}"), SchemaError);
    CHECK_THROWS_AS(parse_braced_subset(8, "{1,}"), SchemaError);
    CHECK_THROWS_AS(parse_braced_subset(8, "{a}"), SchemaError);
}

TEST_CASE("[setkit] enumerate_subsets is lexicographic and complete")
{
    SUBCASE("(3,2) in order")
    {
        auto subs = enumerate_subsets(3, 2);
        REQUIRE(subs.size() == 3);
        CHECK(subs[0].members() == std::vector<int> { 1, 2 });
        CHECK(subs[1].members() == std::vector<int> { 1, 3 });
        CHECK(subs[2].members() == std::vector<int> { 2, 3 });
    }
    SUBCASE("(4,0) single empty subset")
    {
        auto subs = enumerate_subsets(4, 0);
        REQUIRE(subs.size() == 1);
        CHECK(subs[0].is_empty());
    }
    SUBCASE("(5,2) count equals the factorial oracle")
    {
        CHECK(enumerate_subsets(5, 2).size() == binom_by_factorials(5, 2));
    }
    SUBCASE("order is strictly lex-increasing, no duplicates")
    {
        for (int n = 0; n <= 7; ++n)
            for (int k = 0; k <= n; ++k) {
                auto subs = enumerate_subsets(n, k);
                CHECK(subs.size() == binom(n, k));
                for (size_t i = 1; i < subs.size(); ++i)
                    CHECK(subs[i - 1].lex_less(subs[i]));
            }
    }
    CHECK_THROWS_AS(enumerate_subsets(3, 4), InvalidParameters);
    CHECK_THROWS_AS(enumerate_subsets(-1, 0), InvalidParameters);
}

TEST_CASE("[setkit] ranking is the inverse of enumeration")
{
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            auto subs = enumerate_subsets(n, k);
            std::set<unsigned long long> seen;
            for (size_t i = 0; i < subs.size(); ++i) {
                CHECK(rank_subset(subs[i]) == i);
                seen.insert(rank_subset(subs[i]));
            }
            CHECK(seen.size() == subs.size());
        }
}

TEST_CASE("[setkit] min_under_order")
{
    SUBCASE("identity order gives the numeric minimum")
    {
        Permutation id = Permutation::identity(5);
        CHECK(min_under_order(id, Subset::of(5, { 2, 4, 5 })) == 2);
    }
    SUBCASE("forced examples")
    {
        Permutation s1 = Permutation::from_seq({ 3, 1, 2 });
        CHECK(min_under_order(s1, Subset::of(3, { 1, 2 })) == 1);
        Permutation s2 = Permutation::from_seq({ 2, 3, 1 });
        CHECK(min_under_order(s2, Subset::of(3, { 1, 3 })) == 3);
    }
    SUBCASE("result is always a member")
    {
        Rng rng(99);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + rng.below(8);
            Permutation sigma = random_permutation(n, rng);
            Subset r = Subset::empty(n);
            const int size = 1 + rng.below(n);
            while (r.size() < size)
                r = r.with(1 + rng.below(n));
            const int m = min_under_order(sigma, r);
            CHECK(r.contains(m));
            // no member sits earlier in the ordering
            for (int x : r.members())
                CHECK(sigma.position(m) <= sigma.position(x));
        }
    }
    CHECK_THROWS_AS(min_under_order(Permutation::identity(4), Subset::empty(4)), InvalidParameters);
}

TEST_CASE("[setkit] permutation validation and inverse")
{
    CHECK_THROWS_AS(Permutation::from_seq({ 1, 1, 3 }), InvalidParameters);
    CHECK_THROWS_AS(Permutation::from_seq({ 0, 1, 2 }), InvalidParameters);
    Permutation p = Permutation::from_seq({ 3, 1, 4, 2 });
    CHECK(p.image(1) == 3);
    CHECK(p.position(3) == 1);
    for (int i = 1; i <= 4; ++i)
        CHECK(p.position(p.image(i)) == i);
    CHECK(p.apply(Subset::of(4, { 1, 2 })).members() == std::vector<int> { 1, 3 });
}

TEST_CASE("[setkit] random_permutation determinism and trivial case")
{
    Rng a(42), b(42);
    CHECK(random_permutation(5, a).seq() == random_permutation(5, b).seq());
    Rng c(7);
    CHECK(random_permutation(1, c).seq() == std::vector<int> { 1 });
    Rng d(1);
    CHECK_THROWS_AS(random_permutation(0, d), InvalidParameters);
}

TEST_CASE("[setkit] random_permutation uniformity (chi-square over 6000 draws)")
{
    Rng rng(20240817);
    std::map<std::vector<int>, int> counts;
    const int draws = 6000;
    for (int i = 0; i < draws; ++i)
        ++counts[random_permutation(3, rng).seq()];
    CHECK(counts.size() == 6);
    double chi2 = 0.0;
    const double expected = draws / 6.0;
    for (const auto& [seq, c] : counts)
        chi2 += (c - expected) * (c - expected) / expected;
    // df = 5, 99.9% quantile
    CHECK(chi2 < 20.515);
}

TEST_CASE("[setkit] all_permutations")
{
    CHECK(all_permutations(1).size() == 1);
    CHECK(all_permutations(4).size() == 24);
    std::set<std::vector<int>> uniq;
    for (const auto& p : all_permutations(4))
        uniq.insert(p.seq());
    CHECK(uniq.size() == 24);
}
