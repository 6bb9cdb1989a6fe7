/* extend_search.hpp -- extending and totally extending words for small subsets */

#pragma once

#include <optional>

#include "preimage/automaton.hpp"
#include "preimage/pair_analysis.hpp"
#include "preimage/search.hpp"

namespace preimage {

/// Shortest word w with |S.w^-1| > |S|, searched in the automaton of subsets
/// of size at most |S|.
///
/// Every subset A with sum_{q in A} |q.a^-1| > |S| for some letter a is a
/// source at depth 1 (tagged with the smallest such a). A forward BFS over
/// images stops at the first subset contained in S; the answer is the source
/// letter followed by the path word. Returns no word when S is empty, S = Q,
/// or S is not extensible.
///
/// Throws BudgetExceeded when the sum of C(n, i), i <= |S|, exceeds the node
/// limit, or when the search creates more nodes than allowed.
SearchResult shortest_extending_word_small(const Automaton& a, const StateSet& s, const SearchLimits& limits = {});

/// A word w with S.w^-1 = Q (equivalently Q.w subset of S), or none if S is
/// not totally extensible. The word is u followed by a BFS path from Q.u to a
/// subset of S, where u has minimal rank; it is not guaranteed shortest.
SearchResult totally_extending_word_small(const Automaton& a, const StateSet& s, const SearchLimits& limits = {});
SearchResult totally_extending_word_small(const Automaton& a, const PairTable& pairs, const StateSet& s,
                                          const SearchLimits& limits = {});

struct SynchronizingExtension {
    bool extensible = false;
    std::optional<Word> witness;
};

/// Total extensibility in a synchronizing automaton: S is totally extensible
/// iff it meets the unique sink component. The witness, when requested, is a
/// greedy reset word followed by a path into S.
///
/// Throws std::invalid_argument if the automaton is not synchronizing.
SynchronizingExtension totally_extensible_synchronizing(const Automaton& a, const StateSet& s,
                                                        bool want_witness = true);

}  // namespace preimage
