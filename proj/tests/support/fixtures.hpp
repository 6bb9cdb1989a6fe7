/* fixtures.hpp -- named automata and generators shared by the tests */

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "preimage/automaton.hpp"

namespace testing_support {

using preimage::Automaton;
using preimage::State;
using preimage::StateSet;

/// a: 0->1->2->3->0; b fixes 0, 1, 2 and sends 3 to 0.
inline Automaton cerny4() { return Automaton(4, 2, {1, 0, 2, 1, 3, 2, 0, 0}); }

/// a: 3-cycle 0->1->2->0; b swaps 0 and 1.
inline Automaton perm3() { return Automaton(3, 2, {1, 1, 2, 0, 0, 2}); }

/// One letter, 0->1, 1->1.
inline Automaton chain2() { return Automaton(2, 1, {1, 1}); }

/// Table number `index` in the mixed-radix enumeration of all n^(nk) tables.
inline Automaton table_by_index(std::size_t n, std::size_t k, std::uint64_t index) {
    std::vector<State> t(n * k);
    for (auto& x : t) {
        x = static_cast<State>(index % n);
        index /= n;
    }
    return Automaton(n, k, std::move(t));
}

inline std::uint64_t table_count(std::size_t n, std::size_t k) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < n * k; ++i) c *= n;
    return c;
}

/// Uniform random table, independent of the library generator.
inline Automaton random_table(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    std::vector<State> t(n * k);
    for (auto& x : t) x = pick(rng);
    return Automaton(n, k, std::move(t));
}

inline StateSet random_subset(std::mt19937_64& rng, std::size_t n) {
    StateSet s(n);
    for (State q = 0; q < n; ++q)
        if (rng() & 1u) s.insert(q);
    return s;
}

inline StateSet subset_from_mask(std::uint64_t mask, std::size_t n) {
    StateSet s(n);
    for (State q = 0; q < n; ++q)
        if ((mask >> q) & 1u) s.insert(q);
    return s;
}

}  // namespace testing_support
