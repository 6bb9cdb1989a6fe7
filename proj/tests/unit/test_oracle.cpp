#include <catch2/catch_amalgamated.hpp>

#include <bit>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "preimage/oracle.hpp"

using namespace preimage;
using namespace testing_support;

TEST_CASE("Masks round-trip", "[oracle]") {
    const StateSet s(10, {0, 4, 9});
    CHECK(to_mask(s) == 0b1000010001u);
    CHECK(from_mask(to_mask(s), 10) == s);
    CHECK(to_mask(StateSet(5)) == 0u);
    CHECK_THROWS_AS(to_mask(StateSet(65)), OracleCapExceeded);
}

TEST_CASE("Shortest reset word of the four-state example has length 9", "[oracle]") {
    const auto w = oracle_shortest_reset(cerny4());
    REQUIRE(w.has_value());
    CHECK(w->size() == 9);
    CHECK(apply_word(cerny4(), StateSet::full(4), *w).size() == 1);
    CHECK_FALSE(oracle_shortest_reset(perm3()).has_value());
    CHECK(oracle_min_rank(perm3()) == 3);
    CHECK(oracle_min_rank(cerny4()) == 1);
}

TEST_CASE("Oracle refuses automata above its cap", "[oracle]") {
    std::mt19937_64 rng(1);
    const Automaton big = random_table(rng, 21, 2);
    CHECK_THROWS_AS(oracle_shortest(big, StateSet(21, {0}), Goal::extending), OracleCapExceeded);
    CHECK_NOTHROW(oracle_shortest(big, StateSet(21, {0}), Goal::extending, OracleLimits{21, 1u << 24}));
    CHECK_THROWS_AS(oracle_shortest(big, StateSet(21, {0}), Goal::extending, OracleLimits{64, 3}), BudgetExceeded);
}

TEST_CASE("Subset BFS records shortest words", "[oracle]") {
    const Automaton a = cerny4();
    const auto bfs = backward_subset_bfs(a, StateSet(4, {1, 2}));
    const SubsetMask target = to_mask(StateSet(4, {0, 1, 3}));
    REQUIRE(bfs.contains(target));
    CHECK(bfs.word_to(target) == Word{1, 0});
    for (SubsetMask t : bfs.order)
        CHECK(from_mask(t, 4) == preimage_word(a, StateSet(4, {1, 2}), bfs.word_to(t)));
    const auto fwd = forward_subset_bfs(a, StateSet::full(4));
    for (SubsetMask t : fwd.order) CHECK(from_mask(t, 4) == apply_word(a, StateSet::full(4), fwd.word_to(t)));
}

TEST_CASE("Oracle agrees with word enumeration", "[oracle][property]") {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 400; ++round) {
        const std::size_t k = 1 + rng() % 2;
        const std::size_t n = 1 + rng() % (k == 1 ? 4 : 3);
        const Automaton a = random_table(rng, n, k);
        const StateSet s = random_subset(rng, n);
        const brute::Mask sm = to_mask(s);
        const int size = static_cast<int>(s.size());
        // No subset-walk is longer than the number of subsets.
        const std::size_t bound = std::size_t{1} << n;
        struct Case {
            Goal goal;
            std::function<bool(brute::Mask)> pred;
            bool allow_empty;
        };
        const Case cases[] = {
            {Goal::extending, [&](brute::Mask t) { return std::popcount(t) > size; }, false},
            {Goal::totally_extending, [&](brute::Mask t) { return t == brute::full(a); }, true},
            {Goal::avoiding, [](brute::Mask t) { return t == 0; }, true},
            {Goal::resizing, [&](brute::Mask t) { return std::popcount(t) != size; }, false},
        };
        for (const auto& c : cases) {
            const auto expected = brute::enumerate_shortest(a, bound, [&](const brute::Letters& w) {
                return (c.allow_empty || !w.empty()) && c.pred(brute::preimage_of(a, sm, w));
            });
            const auto got = oracle_shortest(a, s, c.goal);
            REQUIRE(got.has_value() == expected.has_value());
            if (!got) continue;
            CHECK(got->size() == expected->size());
            CHECK(c.pred(to_mask(preimage_word(a, s, *got))));
        }
    }
}
