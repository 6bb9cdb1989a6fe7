#include <catch2/catch_amalgamated.hpp>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "preimage/pair_analysis.hpp"

using namespace preimage;
using namespace testing_support;

TEST_CASE("Pair distances on the four-state example", "[pairs]") {
    const Automaton a = cerny4();
    const PairTable t(a);
    CHECK(t.distance(0, 3) == 1);
    CHECK(t.word(0, 3) == Word{1});
    CHECK(t.all_compressible());
    CHECK(t.distance(2, 1) == t.distance(1, 2));
    CHECK_THROWS(t.distance(1, 1));
}

TEST_CASE("Pair distances equal shortest merging words", "[pairs][property]") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 2 + rng() % 4, k = 1 + rng() % 2;
        const Automaton a = random_table(rng, n, k);
        const PairTable t(a);
        bool all = true;
        for (State p = 0; p < n; ++p) {
            for (State q = p + 1; q < n; ++q) {
                const auto w = brute::enumerate_shortest(a, n * (n - 1) / 2, [&](const brute::Letters& x) {
                    return brute::run(a, p, x) == brute::run(a, q, x);
                });
                REQUIRE(t.compressible(p, q) == w.has_value());
                REQUIRE(t.compressible(p, q) == brute::compressible(a, p, q));
                all = all && w.has_value();
                if (!w) continue;
                CHECK(t.distance(p, q) == w->size());
                const Word found = *t.word(p, q);
                CHECK(found.size() == w->size());
                CHECK(a.next(p, found) == a.next(q, found));
            }
        }
        CHECK(t.all_compressible() == all);
    }
}

TEST_CASE("Synchronization, greedy reset and minimal rank", "[pairs][property]") {
    CHECK(is_synchronizing(cerny4()));
    CHECK_FALSE(is_synchronizing(perm3()));
    CHECK(is_synchronizing(chain2()));
    CHECK(minimal_rank_word(perm3()).rank() == 3);
    CHECK(minimal_rank_word(perm3()).word.empty());

    std::mt19937_64 rng(99);
    for (int round = 0; round < 1000; ++round) {
        const std::size_t n = 1 + rng() % 7, k = 1 + rng() % 3;
        const Automaton a = random_table(rng, n, k);
        const bool sync = brute::synchronizing(a);
        REQUIRE(is_synchronizing(a) == sync);
        const auto reset = greedy_reset_word(a);
        REQUIRE(reset.has_value() == sync);
        if (reset) CHECK(apply_word(a, a.all_states(), *reset).size() == 1);
        const auto r = minimal_rank_word(a);
        CHECK(r.rank() == brute::min_rank(a));
        CHECK(apply_word(a, a.all_states(), r.word) == r.image);
        // The image is incompressible.
        const PairTable t(a);
        r.image.for_each([&](State p) {
            r.image.for_each([&](State q) {
                if (p < q) CHECK_FALSE(t.compressible(p, q));
            });
        });
    }
}

TEST_CASE("avoidable_state matches brute force", "[pairs][avoid]") {
    CHECK(avoidable_state(chain2(), 0));
    CHECK_FALSE(avoidable_state(chain2(), 1));
    CHECK_FALSE(avoidable_state(perm3(), 0));
    CHECK(avoidable_state(cerny4(), 2));
    CHECK_THROWS_AS(avoidable_state(cerny4(), 4), std::out_of_range);

    for (std::uint64_t i = 0; i < table_count(3, 2); ++i) {
        const Automaton a = table_by_index(3, 2, i);
        const bool sync = brute::synchronizing(a);
        for (State q = 0; q < 3; ++q) {
            const bool expected = brute::avoidable(a, q);
            CHECK(avoidable_state(a, q) == expected);
            CHECK(avoidable_state(a, q, sync) == expected);
        }
    }
    std::mt19937_64 rng(3);
    for (int round = 0; round < 1000; ++round) {
        const Automaton a = random_table(rng, 1 + rng() % 7, 1 + rng() % 3);
        for (State q = 0; q < a.states(); ++q) CHECK(avoidable_state(a, q) == brute::avoidable(a, q));
    }
}
