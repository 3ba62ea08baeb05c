#pragma once

// Commutative polynomials keyed by exponent vectors. Used for the A-part
// (powers of x^{1_[p]}) and the 𝔽[D]-part (powers of ∂_q) of monomials,
// where all variables commute.

#include <map>

#include "weyl/algebra.hpp"

namespace weyl::detail {

using IndexPoly = std::map<MultiIndex, Rational>;

IndexPoly poly_one(std::size_t nvars);
/// Σ_k coeffs[k]·y_k + constant.
IndexPoly poly_linear(const RatVec& coeffs, const Rational& constant = 0);
IndexPoly poly_mul(const IndexPoly& a, const IndexPoly& b);
IndexPoly poly_pow(const IndexPoly& a, std::int64_t k);

}  // namespace weyl::detail
