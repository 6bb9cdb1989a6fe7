/* search.hpp -- budgets and results shared by the subset searches */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "preimage/word.hpp"

namespace preimage {

inline constexpr std::uint64_t default_node_budget = 50'000'000;

struct SearchLimits {
    /// Maximum number of subset nodes a search may create, sources included.
    std::uint64_t node_limit = default_node_budget;
};

struct SearchStats {
    std::uint64_t nodes_created = 0;
    std::uint64_t nodes_expanded = 0;
};

/// A search would exceed its node budget. This is a resource limit, not an
/// answer: the instance may or may not have a solution.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t limit, std::uint64_t needed)
        : std::runtime_error("node budget of " + std::to_string(limit) + " exceeded (needs at least " +
                             std::to_string(needed) + ")"),
          limit_(limit) {}

    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
};

struct SearchResult {
    std::optional<Word> word;
    SearchStats stats;

    bool found() const noexcept { return word.has_value(); }
};

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) noexcept;

}  // namespace preimage
