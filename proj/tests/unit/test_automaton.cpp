#include <catch2/catch_amalgamated.hpp>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "preimage/automaton.hpp"

using namespace preimage;
using namespace testing_support;

TEST_CASE("Automaton validates its table", "[automaton]") {
    CHECK_THROWS_AS(Automaton(2, 1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, 1, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(0, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(1, 0, {}), std::invalid_argument);
    const Automaton a = cerny4();
    CHECK(a.states() == 4);
    CHECK(a.letters() == 2);
    CHECK(a.next(3, 1) == 0);
    CHECK(a.next(0, Word{0, 0, 1}) == 2);
    CHECK(Automaton::from_columns({{1, 2, 3, 0}, {0, 1, 2, 0}}) == a);
}

TEST_CASE("Predecessor lists invert the table", "[automaton]") {
    const Automaton a = cerny4();
    auto pre = a.predecessors(0, 1);
    CHECK(std::vector<State>(pre.begin(), pre.end()) == std::vector<State>{0, 3});
    CHECK(a.predecessors(3, 1).empty());
}

TEST_CASE("Images and preimages on the four-state example", "[automaton]") {
    const Automaton a = cerny4();
    CHECK(apply_word(a, StateSet(4, {1, 2}), Word{0, 0, 1}) == StateSet(4, {0}));
    CHECK(preimage_letter(a, StateSet(4, {0, 1}), 1) == StateSet(4, {0, 1, 3}));
    CHECK(preimage_word(a, StateSet(4, {1, 2}), Word{1, 0}) == StateSet(4, {0, 1, 3}));
    CHECK(preimage_letter(a, StateSet(4, {1, 3}), 1) == StateSet(4, {1}));
    CHECK(preimage_word(a, StateSet(4, {2}), Word{}) == StateSet(4, {2}));
    CHECK_THROWS_AS(apply_word(a, StateSet(4), Word{2}), std::invalid_argument);
    CHECK_THROWS_AS(preimage_word(a, StateSet(3), Word{0}), std::invalid_argument);
}

TEST_CASE("Preimage properties on random automata", "[automaton][property]") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 500; ++round) {
        const std::size_t n = 1 + rng() % 7, k = 1 + rng() % 3;
        const Automaton a = random_table(rng, n, k);
        const StateSet s = random_subset(rng, n), t = random_subset(rng, n);
        std::vector<Letter> lu(rng() % 4), lv(rng() % 4);
        for (auto& x : lu) x = static_cast<Letter>(rng() % k);
        for (auto& x : lv) x = static_cast<Letter>(rng() % k);
        const Word u(lu), v(lv);

        // Galois connection: T.w subset of S iff T subset of S.w^-1.
        CHECK(apply_word(a, t, u).is_subset_of(s) == t.is_subset_of(preimage_word(a, s, u)));
        // S.(uv)^-1 = (S.v^-1).u^-1
        CHECK(preimage_word(a, s, u + v) == preimage_word(a, preimage_word(a, s, v), u));
        CHECK(apply_word(a, t, u + v) == apply_word(a, apply_word(a, t, u), v));
        // Preimages of S and its complement partition Q.
        const StateSet p = preimage_word(a, s, u), pc = preimage_word(a, s.complement(), u);
        CHECK_FALSE(p.intersects(pc));
        CHECK((p | pc).is_full());
        // Definition, state by state.
        brute::Mask sm = 0;
        s.for_each([&](State q) { sm |= brute::Mask{1} << q; });
        CHECK(subset_from_mask(brute::preimage_of(a, sm, lu), n) == p);
    }
}

TEST_CASE("SCC decomposition matches mutual reachability", "[automaton][scc]") {
    for (std::size_t n : {1u, 2u, 3u}) {
        for (std::uint64_t i = 0; i < table_count(n, 2); ++i) {
            const Automaton a = table_by_index(n, 2, i);
            const auto d = scc(a);
            const auto r = brute::reachability(a);
            const auto sink = brute::in_sink_component(a);
            for (State p = 0; p < n; ++p) {
                CHECK(d.is_sink[d.component_of[p]] == sink[p]);
                for (State q = 0; q < n; ++q)
                    CHECK((d.component_of[p] == d.component_of[q]) == (r[p][q] && r[q][p]));
            }
            CHECK(is_strongly_connected(a) == (d.count() == 1));
        }
    }
}

TEST_CASE("SCC components are sorted and partition Q", "[automaton][scc]") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 30;
        const Automaton a = random_table(rng, n, 1 + rng() % 3);
        const auto d = scc(a);
        std::size_t total = 0;
        for (std::size_t c = 0; c < d.count(); ++c) {
            total += d.components[c].size();
            CHECK(std::is_sorted(d.components[c].begin(), d.components[c].end()));
            if (c > 0) CHECK(d.components[c - 1].front() < d.components[c].front());
            for (State q : d.components[c]) CHECK(d.component_of[q] == c);
        }
        CHECK(total == n);
        CHECK(d.sink_count() >= 1);
    }
}

TEST_CASE("Structural predicates", "[automaton]") {
    CHECK(is_strongly_connected(cerny4()));
    CHECK_FALSE(is_permutation_automaton(cerny4()));
    CHECK(is_permutation_automaton(perm3()));
    CHECK_FALSE(is_strongly_connected(chain2()));
    CHECK(sink_state(chain2()) == State{1});
    CHECK_FALSE(sink_state(cerny4()).has_value());
}

TEST_CASE("path_word finds a shortest path", "[automaton]") {
    const Automaton a = cerny4();
    CHECK(path_word(a, 0, StateSet(4, {3})) == Word{0, 0, 0});
    CHECK(path_word(a, 2, StateSet(4, {2})) == Word{});
    CHECK_FALSE(path_word(chain2(), 1, StateSet(2, {0})).has_value());
}
