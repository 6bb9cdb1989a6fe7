/* pair_analysis.hpp -- compressible pairs, synchronization, minimal rank */

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "preimage/automaton.hpp"

namespace preimage {

/// Shortest compressing word for every unordered pair {p, q}, p != q.
///
/// Built by a multi-source breadth-first search over the pair automaton with
/// inverse edges, started from all pairs merged by a single letter.
class PairTable {
public:
    static constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

    explicit PairTable(const Automaton& a);

    std::size_t states() const noexcept { return n_; }

    /// Length of a shortest word w with p.w = q.w, or `unreachable`.
    std::uint32_t distance(State p, State q) const;
    bool compressible(State p, State q) const { return distance(p, q) != unreachable; }

    /// A shortest compressing word for {p, q}; none if the pair is not compressible.
    std::optional<Word> word(State p, State q) const;

    /// True iff every pair is compressible.
    bool all_compressible() const noexcept { return all_compressible_; }

private:
    std::size_t index(State p, State q) const;

    std::size_t n_;
    std::vector<std::uint32_t> dist_;
    std::vector<Letter> letter_;
    std::vector<State> succ_p_;
    std::vector<State> succ_q_;
    bool all_compressible_ = true;
};

bool is_synchronizing(const Automaton& a);

/// A reset word built greedily: repeatedly append a shortest compressing word
/// for a pair of the current image (shortest first, then smallest pair).
/// None if the automaton is not synchronizing. Not necessarily shortest.
std::optional<Word> greedy_reset_word(const Automaton& a);
std::optional<Word> greedy_reset_word(const Automaton& a, const PairTable& pairs);

struct RankResult {
    Word word;
    StateSet image;

    std::size_t rank() const noexcept { return image.size(); }
};

/// A word of minimal rank, found by compressing Q greedily until no pair of
/// the image is compressible. Returns the empty word when Q has no
/// compressible pair.
RankResult minimal_rank_word(const Automaton& a);
RankResult minimal_rank_word(const Automaton& a, const PairTable& pairs);

/// Is there a word w with q not in Q.w?
///
/// If `known_synchronizing` holds a value it is trusted and the synchronizing
/// shortcut (q is avoidable iff it is not a sink state) is used. Otherwise a
/// state outside every sink component is avoidable, and a state in a sink
/// component is avoidable iff it forms a compressible pair with another state
/// of that component. Throws std::out_of_range for an invalid state.
bool avoidable_state(const Automaton& a, State q, std::optional<bool> known_synchronizing = std::nullopt);

}  // namespace preimage
