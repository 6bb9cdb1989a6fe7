#include "preimage/rational_basis.hpp"

#include <stdexcept>

namespace preimage {

RationalVector RationalBasis::residual(const RationalVector& g) const {
    if (g.size() != dimension_) throw std::invalid_argument("vector dimension does not match the basis");
    RationalVector out = g;
    for (std::size_t r = 0; r < vectors_.size(); ++r) {
        // Coefficients come from g itself: the other basis vectors vanish at this pivot.
        const Rational& coeff = g[pivots_[r]];
        if (sgn(coeff) == 0) continue;
        const RationalVector& v = vectors_[r];
        if (coeff == 1) {
            for (std::size_t i = 0; i < dimension_; ++i)
                if (sgn(v[i]) != 0) out[i] -= v[i];
        } else {
            for (std::size_t i = 0; i < dimension_; ++i)
                if (sgn(v[i]) != 0) out[i] -= coeff * v[i];
        }
    }
    return out;
}

std::optional<std::size_t> RationalBasis::insert(const RationalVector& g) {
    RationalVector res = residual(g);
    std::size_t pivot = dimension_;
    for (std::size_t i = 0; i < dimension_; ++i)
        if (sgn(res[i]) != 0) {
            pivot = i;
            break;
        }
    if (pivot == dimension_) return std::nullopt;

    if (res[pivot] != 1) {
        const Rational scale = 1 / res[pivot];
        for (auto& x : res)
            if (sgn(x) != 0) x *= scale;
    }
    // Keep the form reduced: clear the new pivot from the older vectors.
    for (auto& v : vectors_) {
        if (sgn(v[pivot]) == 0) continue;
        const Rational coeff = v[pivot];
        for (std::size_t i = 0; i < dimension_; ++i)
            if (sgn(res[i]) != 0) v[i] -= coeff * res[i];
    }
    vectors_.push_back(std::move(res));
    pivots_.push_back(pivot);
    return pivot;
}

bool RationalBasis::in_span(const RationalVector& g) const {
    for (const auto& x : residual(g))
        if (sgn(x) != 0) return false;
    return true;
}

bool RationalBasis::invariants_hold() const {
    for (std::size_t r = 0; r < vectors_.size(); ++r) {
        if (vectors_[r].size() != dimension_) return false;
        for (std::size_t j = 0; j < pivots_.size(); ++j) {
            const Rational& x = vectors_[r][pivots_[j]];
            if (r == j ? x != 1 : sgn(x) != 0) return false;
        }
    }
    return true;
}

}  // namespace preimage
