/* oracle.hpp -- exhaustive power-set searches used as ground truth */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "preimage/automaton.hpp"
#include "preimage/search.hpp"

namespace preimage {

using SubsetMask = std::uint64_t;

struct OracleLimits {
    /// Refuse automata with more states than this (at most 64).
    std::size_t max_states = 20;
    std::uint64_t node_limit = std::uint64_t{1} << 24;
};

enum class Direction { preimage, image };

/// Breadth-first closure of one subset under T -> T.a^-1 (preimage) or
/// T -> T.a (image). Depths are exact shortest distances.
struct SubsetBfsResult {
    struct Entry {
        std::uint32_t depth;
        Letter letter;      // letter of the edge that reached this subset
        SubsetMask parent;  // subset it was reached from (itself for the origin)
    };

    Direction direction;
    std::size_t states;
    SubsetMask origin;
    std::unordered_map<SubsetMask, Entry> reached;
    std::vector<SubsetMask> order;  // BFS order, nondecreasing depth

    bool contains(SubsetMask t) const { return reached.count(t) != 0; }

    /// A shortest word leading from the origin to t. For preimages each edge
    /// letter goes in front, since (S.w^-1).a^-1 = S.(aw)^-1.
    Word word_to(SubsetMask t) const;
};

SubsetMask to_mask(const StateSet& s);
StateSet from_mask(SubsetMask m, std::size_t states);

/// Thrown when the automaton is larger than OracleLimits::max_states.
class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SubsetBfsResult backward_subset_bfs(const Automaton& a, const StateSet& s, const OracleLimits& limits = {});
SubsetBfsResult forward_subset_bfs(const Automaton& a, const StateSet& start, const OracleLimits& limits = {});

enum class Goal { extending, totally_extending, avoiding, resizing };

/// Shortest word reaching the goal in the preimage BFS from S, or none.
/// extending: |T| > |S|; totally extending: T = Q; avoiding: T = {};
/// resizing: |T| != |S|, excluding the empty word.
std::optional<Word> oracle_shortest(const Automaton& a, const StateSet& s, Goal goal, const OracleLimits& limits = {});

/// Shortest reset word from a forward BFS from Q, or none.
std::optional<Word> oracle_shortest_reset(const Automaton& a, const OracleLimits& limits = {});

/// Smallest |Q.w| over all words.
std::size_t oracle_min_rank(const Automaton& a, const OracleLimits& limits = {});

}  // namespace preimage
