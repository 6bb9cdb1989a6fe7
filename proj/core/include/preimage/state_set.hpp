/* state_set.hpp -- fixed-universe bit set of automaton states */

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace preimage {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Subset of the states [0, n) of one automaton.
///
/// Stored as a packed bit vector sized to n; the cardinality is cached and
/// kept in sync by every mutating call. Binary operations require both sets
/// to have the same universe and throw std::invalid_argument otherwise.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe);
    StateSet(std::size_t universe, std::initializer_list<State> members);
    StateSet(std::size_t universe, std::span<const State> members);

    static StateSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }
    bool is_full() const noexcept { return count_ == universe_; }

    bool contains(State q) const noexcept {
        return q < universe_ && ((blocks_[q >> 6] >> (q & 63)) & 1u);
    }

    /// Returns true if q was not yet a member.
    bool insert(State q);
    bool erase(State q);
    void clear() noexcept;

    bool is_subset_of(const StateSet& other) const;
    bool intersects(const StateSet& other) const;

    StateSet operator|(const StateSet& other) const;
    StateSet operator&(const StateSet& other) const;
    StateSet operator-(const StateSet& other) const;
    StateSet complement() const;

    /// Members in ascending order.
    std::vector<State> members() const;
    /// Smallest member, or universe() when empty.
    State first() const noexcept;
    /// Smallest member greater than q, or universe() when none.
    State next_after(State q) const noexcept;

    std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }

    bool operator==(const StateSet& other) const noexcept {
        return universe_ == other.universe_ && blocks_ == other.blocks_;
    }

    /// Bit-pattern hash, usable as a visited-set key.
    std::size_t hash() const noexcept;

    /// "{0,2,5}"
    std::string to_string() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            std::uint64_t word = blocks_[b];
            while (word != 0) {
                const int bit = std::countr_zero(word);
                f(static_cast<State>(b * 64 + static_cast<std::size_t>(bit)));
                word &= word - 1;
            }
        }
    }

private:
    void check_same_universe(const StateSet& other) const;
    void recount() noexcept;

    std::size_t universe_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> blocks_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

}  // namespace preimage
