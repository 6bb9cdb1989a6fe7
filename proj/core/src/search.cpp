#include "preimage/search.hpp"

#include <limits>

namespace preimage {

namespace {
__extension__ typedef unsigned __int128 u128;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) noexcept {
    constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > max) return max;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace preimage
