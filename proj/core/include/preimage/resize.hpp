/* resize.hpp -- shortest words changing the size of a preimage */

#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "preimage/automaton.hpp"
#include "preimage/rational_basis.hpp"

namespace preimage {

struct ResizeResult {
    std::optional<Word> word;
    std::size_t basis_size = 0;
    std::size_t vectors_tested = 0;
};

/// Augmented vector (chi_T, 1) of length n + 1.
RationalVector augmented_vector(const StateSet& t);

/// Shortest w with |S.w^-1| != |S|, or none if every preimage of S has |S| states.
///
/// Words are generated breadth-first by prepending letters, since
/// S.(aw)^-1 = (S.w^-1).a^-1. Each preimage is turned into its augmented
/// vector (chi, 1); the discrepancy sum(chi) - |S| is linear in that vector,
/// so only words whose vectors are independent of the ones kept so far need
/// to be extended. The first vector with nonzero discrepancy gives a shortest
/// resizing word. All arithmetic is exact. The returned length is at most n - 1.
/// `on_insert`, if set, observes the basis after every successful insertion.
ResizeResult shortest_resizing_word(const Automaton& a, const StateSet& s,
                                    const std::function<void(const RationalBasis&)>& on_insert = {});

/// Fast decision for synchronizing automata: a resizing word exists iff
/// S is neither empty nor Q. Returns none when `known_synchronizing` is not
/// known to be true, meaning the caller has to run shortest_resizing_word.
std::optional<bool> resizable_decision_fast(const Automaton& a, const StateSet& s,
                                            std::optional<bool> known_synchronizing);

}  // namespace preimage
