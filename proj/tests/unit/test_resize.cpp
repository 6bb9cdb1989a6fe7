#include <catch2/catch_amalgamated.hpp>

#include <bit>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "preimage/resize.hpp"

using namespace preimage;
using namespace testing_support;

TEST_CASE("Resizing words on small examples", "[resize]") {
    CHECK_FALSE(shortest_resizing_word(perm3(), StateSet(3, {0})).word.has_value());
    const auto r = shortest_resizing_word(cerny4(), StateSet(4, {1, 2}));
    REQUIRE(r.word.has_value());
    CHECK(r.word->size() == 2);
    CHECK(preimage_word(cerny4(), StateSet(4, {1, 2}), *r.word).size() != 2);
    CHECK_FALSE(shortest_resizing_word(cerny4(), StateSet(4)).word.has_value());
    CHECK_FALSE(shortest_resizing_word(cerny4(), StateSet::full(4)).word.has_value());
    CHECK(augmented_vector(StateSet(3, {1})) == RationalVector{0, 1, 0, 1});
}

TEST_CASE("Shortest resizing word equals brute force", "[resize][property]") {
    std::mt19937_64 rng(1618);
    for (int round = 0; round < 2000; ++round) {
        const std::size_t n = 1 + rng() % 6, k = 1 + rng() % 3;
        const Automaton a = random_table(rng, n, k);
        const StateSet s = random_subset(rng, n);
        brute::Mask sm = 0;
        s.for_each([&](State q) { sm |= brute::Mask{1} << q; });
        const auto expected = brute::shortest_preimage_length(
            a, sm, [&](brute::Mask t) { return std::popcount(t) != static_cast<int>(s.size()); }, false);
        bool invariants = true;
        const auto r = shortest_resizing_word(a, s, [&](const RationalBasis& b) {
            invariants = invariants && b.invariants_hold();
        });
        CHECK(invariants);
        REQUIRE(r.word.has_value() == expected.has_value());
        CHECK(r.basis_size <= n);
        if (!r.word) continue;
        CHECK(r.word->size() == *expected);
        CHECK(r.word->size() <= n - 1);
        CHECK(preimage_word(a, s, *r.word).size() != s.size());
    }
}

TEST_CASE("Resizable fast path for synchronizing automata", "[resize][sync]") {
    CHECK(resizable_decision_fast(cerny4(), StateSet(4, {1}), true) == true);
    CHECK(resizable_decision_fast(cerny4(), StateSet(4), true) == false);
    CHECK(resizable_decision_fast(cerny4(), StateSet::full(4), true) == false);
    CHECK_FALSE(resizable_decision_fast(cerny4(), StateSet(4, {1}), std::nullopt).has_value());
    CHECK_FALSE(resizable_decision_fast(perm3(), StateSet(3, {1}), false).has_value());
}
