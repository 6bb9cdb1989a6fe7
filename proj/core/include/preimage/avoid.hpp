/* avoid.hpp -- words avoiding a subset of states */

#pragma once

#include <cstddef>
#include <vector>

#include "preimage/automaton.hpp"
#include "preimage/pair_analysis.hpp"
#include "preimage/search.hpp"

namespace preimage {

/// Partition of Q by a minimal-rank word u: p1 ~ p2 iff p1.u = p2.u.
struct RankPartition {
    Word word;
    StateSet image;                     // Q.u
    std::vector<std::size_t> class_of;  // class index per state
    std::vector<State> representative;  // image state of each class, ascending
    std::vector<StateSet> classes;
    std::size_t meeting_subset = 0;     // number of classes intersecting S

    std::size_t rank() const noexcept { return classes.size(); }
};

RankPartition rank_partition(const Automaton& a, const StateSet& s);
RankPartition rank_partition(const Automaton& a, const PairTable& pairs, const StateSet& s);

/// A word w with (Q.w) and S disjoint, or none iff S is unavoidable.
///
/// With u of minimal rank and z the number of ~-classes meeting S, a single
/// multi-source BFS runs over the z-subsets reachable from the z-subsets of
/// Q.u. A node T is a goal when it hits C \ S for every class C meeting S;
/// the answer is u followed by the path word. Subsets of the incompressible
/// image Q.u keep their size, so every node has exactly z states.
///
/// S = {} is avoided by the empty word. The source count C(|Q.u|, z) and
/// every created node count against the budget; BudgetExceeded is thrown
/// when it is exhausted. No minimality is claimed.
SearchResult avoiding_word(const Automaton& a, const StateSet& s, const SearchLimits& limits = {});
SearchResult avoiding_word(const Automaton& a, const PairTable& pairs, const StateSet& s,
                           const SearchLimits& limits = {});

}  // namespace preimage
