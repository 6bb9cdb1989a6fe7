/* automaton.hpp -- complete deterministic automata, set actions and structure */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "preimage/state_set.hpp"
#include "preimage/word.hpp"

namespace preimage {

/// Complete deterministic automaton (Q, Sigma, delta) with Q = [0, n) and
/// Sigma = [0, k). Immutable after construction.
class Automaton {
public:
    /// `table` is row-major: table[q * k + a] = delta(q, a).
    /// Throws std::invalid_argument unless n, k >= 1, |table| = n*k and every
    /// entry lies in [0, n).
    Automaton(std::size_t states, std::size_t letters, std::vector<State> table);

    /// Builds from one transition vector per letter: columns[a][q] = delta(q, a).
    static Automaton from_columns(const std::vector<std::vector<State>>& columns);

    std::size_t states() const noexcept { return n_; }
    std::size_t letters() const noexcept { return k_; }

    State next(State q, Letter a) const noexcept { return table_[static_cast<std::size_t>(q) * k_ + a]; }
    State next(State q, const Word& w) const noexcept;

    /// States p with delta(p, a) = q, ascending.
    std::span<const State> predecessors(State q, Letter a) const noexcept;

    std::span<const State> table() const noexcept { return table_; }

    StateSet all_states() const { return StateSet::full(n_); }
    StateSet make_set(std::span<const State> members) const { return StateSet(n_, members); }

    bool operator==(const Automaton& other) const noexcept {
        return n_ == other.n_ && k_ == other.k_ && table_ == other.table_;
    }

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<State> table_;
    // Inverse transitions in CSR form, indexed by a * n + q.
    std::vector<std::size_t> pred_offsets_;
    std::vector<State> pred_states_;
};

/// S.a
StateSet apply_letter(const Automaton& a, const StateSet& s, Letter letter);
/// S.a^-1 = {q : q.a in S}
StateSet preimage_letter(const Automaton& a, const StateSet& s, Letter letter);

/// Image S.w = {q.w : q in S}. Throws std::invalid_argument if S is not over
/// the automaton's states.
StateSet apply_word(const Automaton& a, const StateSet& s, const Word& w);

/// Preimage S.w^-1 = {q : q.w in S}. Throws std::invalid_argument if S is not
/// over the automaton's states.
StateSet preimage_word(const Automaton& a, const StateSet& s, const Word& w);

/// Strongly connected components of the underlying digraph.
///
/// Components are numbered by their smallest member state, so the numbering
/// does not depend on traversal order. A sink component has no transition
/// leaving it.
struct SccDecomposition {
    std::vector<std::size_t> component_of;
    std::vector<std::vector<State>> components;
    std::vector<bool> is_sink;

    std::size_t count() const noexcept { return components.size(); }
    std::size_t sink_count() const noexcept;
};

SccDecomposition scc(const Automaton& a);

bool is_strongly_connected(const Automaton& a);

/// True iff every letter acts as a bijection on the states.
bool is_permutation_automaton(const Automaton& a);

/// Smallest state fixed by every letter, if any.
std::optional<State> sink_state(const Automaton& a);

/// Shortest word leading `from` to some state of `targets`, by BFS in the
/// transition graph. None if no target is reachable.
std::optional<Word> path_word(const Automaton& a, State from, const StateSet& targets);

}  // namespace preimage
