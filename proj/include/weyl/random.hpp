#pragma once

#include <cstdint>
#include <random>

#include "weyl/algebra.hpp"

namespace weyl {

/// Shape limits for random elements.
struct ElementParams {
  int max_terms = 3;
  int max_level = 3;    // |μ|
  int max_i_level = 3;  // |ī|
  int coord_bound = 2;  // Γ-coordinates in [−bound, bound]
};

/// Deterministic sampler. Draws are derived from the raw mt19937_64 stream
/// only, so a seed reproduces the same sequence on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// Nonzero p/q with |p| ≤ 5, 1 ≤ q ≤ 3.
  Rational coefficient();
  Rational nonzero_rational(std::int64_t num_bound, std::int64_t den_bound);

  MultiIndex multi_index(std::size_t length, std::size_t active, int max_total);
  Monomial monomial(const Signature& sig, const ElementParams& p);
  Element element(const SignaturePtr& sig, const ElementParams& p = {});
  /// Random element of A (μ = 0 throughout), nonzero.
  Element a_element(const SignaturePtr& sig, const ElementParams& p = {});
  /// Random monomial with coefficient 1.
  Element monomial_element(const SignaturePtr& sig, const ElementParams& p = {});
  /// Nonzero element of 𝔽[D] with total degree ≤ max_degree and at most max_terms terms.
  Element fd_element(const SignaturePtr& sig, int max_degree, int max_terms);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace weyl
