/* rational_basis.hpp -- exact span membership over the rationals */

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace preimage {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Linearly independent rational vectors kept in reduced pseudo-triangular
/// form: vector j is 1 at its pivot coordinate and every stored vector is 0
/// at the pivots of all the others. Reducing g by g - sum_r g(pivot_r) * g_r
/// therefore zeroes every pivot coordinate of g in one pass.
class RationalBasis {
public:
    explicit RationalBasis(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    const std::vector<RationalVector>& vectors() const noexcept { return vectors_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// g - sum_r g(pivot_r) * g_r.
    RationalVector residual(const RationalVector& g) const;

    /// Adds g if it is independent of the stored vectors and returns its pivot
    /// (the first nonzero coordinate of the residual); returns none if g lies
    /// in the span. Throws std::invalid_argument on a dimension mismatch.
    std::optional<std::size_t> insert(const RationalVector& g);

    bool in_span(const RationalVector& g) const;

    /// Checks the reduced form: pivot entries are 1, other pivots are 0.
    bool invariants_hold() const;

private:
    std::size_t dimension_;
    std::vector<RationalVector> vectors_;
    std::vector<std::size_t> pivots_;
};

}  // namespace preimage
