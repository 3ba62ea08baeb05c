#pragma once

// The algebra W(ℓ₁, ℓ₂, Γ): basis x^{α,ī}∂^μ with (α, ī, μ) ∈ Γ × J₁ × J,
// product u∂^μ · v∂^ν = Σ_λ C(μ,λ) u ∂^λ(v) ∂^{μ+ν−λ}.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weyl/lattice.hpp"
#include "weyl/rational.hpp"

namespace weyl {

using MultiIndex = std::vector<std::int32_t>;

/// |μ| = Σ μ_p.
std::int64_t level(const MultiIndex& mu);

/// Π_p C(μ_p, ν_p); zero as soon as some ν_p > μ_p or ν_p < 0.
Integer multi_binomial(const MultiIndex& mu, const MultiIndex& nu);

/// Level first, then the first differing coordinate (smaller is less).
std::strong_ordering total_order_cmp(const MultiIndex& mu, const MultiIndex& nu);

/// Σ_{λ'≤μ} (−1)^{|λ'|} C(μ, ν−λ') C(μ+λ'−ν, λ').
Integer alternating_binomial_sum(const MultiIndex& mu, const MultiIndex& nu);

class Signature {
 public:
  /// Throws InvalidArgument if ℓ₁+ℓ₂ = 0 or the lattice lives in another dimension.
  Signature(std::size_t ell1, std::size_t ell2, Lattice lattice);

  std::size_t ell1() const { return ell1_; }
  std::size_t ell2() const { return ell2_; }
  std::size_t ell() const { return ell1_ + ell2_; }
  const Lattice& lattice() const { return lattice_; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.ell1_ == b.ell1_ && a.ell2_ == b.ell2_ && a.lattice_ == b.lattice_;
  }

 private:
  std::size_t ell1_;
  std::size_t ell2_;
  Lattice lattice_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::size_t ell1, std::size_t ell2, const std::vector<RatVec>& gamma_generators);

/// x^{α,ī}∂^μ with α stored by its integer coordinates in the canonical
/// lattice basis and ī, μ of length ℓ (ī vanishes past ℓ₁).
struct Monomial {
  IntVec alpha;
  MultiIndex i;
  MultiIndex mu;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: α-coordinates lexicographic, then ī, then μ, both
/// under the level-first order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Element {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit Element(SignaturePtr sig) : sig_(std::move(sig)) {}

  static Element zero(const SignaturePtr& sig) { return Element(sig); }
  static Element scalar(const SignaturePtr& sig, const Rational& c);
  static Element one(const SignaturePtr& sig) { return scalar(sig, 1); }
  static Element monomial(const SignaturePtr& sig, Monomial m, const Rational& c = 1);
  /// x^{α,ī} with α given by lattice coordinates.
  static Element x(const SignaturePtr& sig, const IntVec& alpha_coords, const MultiIndex& i = {});
  /// x^{1_[p]}, p zero-based and < ℓ₁.
  static Element x_poly(const SignaturePtr& sig, std::size_t p);
  /// ∂_q^power, q zero-based.
  static Element d(const SignaturePtr& sig, std::size_t q, std::int32_t power = 1);

  const SignaturePtr& signature() const { return sig_; }
  const Signature& sig() const { return *sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c·m; drops the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  /// Every monomial has μ = 0.
  bool in_A() const;
  /// Every monomial has α = 0 and ī = 0.
  bool in_FD() const;
  /// Coefficient of 1 = x^{0,0}∂^0.
  Rational constant_term() const;
  std::int64_t max_level() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  /// Associative product; throws SignatureMismatch.
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

 private:
  SignaturePtr sig_;
  TermMap terms_;
};

void require_same_signature(const Element& a, const Element& b);

/// Identity monomial fields (α = 0, ī = 0, μ = 0) for a signature.
Monomial unit_monomial(const Signature& sig);

/// α as a rational vector.
RatVec alpha_vector(const Signature& sig, const Monomial& m);

Element mul(const Element& a, const Element& b);
Element bracket(const Element& a, const Element& b);
Element power(const Element& a, std::int64_t k);

/// ∂^λ applied to an element of A. Throws NotInA.
Element derivation_apply(const Signature& sig, const MultiIndex& lambda, const Element& target);

/// θ(w)(a) = Σ u·∂^μ(a) over the terms u∂^μ of w. Throws NotInA.
Element act_on_A(const Element& w, const Element& a);

/// Reads each ∂^μ of w as ∂'^μ with ∂'_p = Σ_q C_{pq} ∂_q (rows of C) and
/// rewrites it in the standard ∂-basis. Throws SingularMatrix.
Element change_D_basis(const Matrix& c, const Element& w);

struct FiltrationData {
  bool empty = true;  // zero element: every entry is a sentinel
  IntVec max_gamma;   // lexicographic maximum of the α-coordinates
  IntVec min_gamma;   // lexicographic minimum (reverse order)
  MultiIndex max_i;   // componentwise maximum of ī
  std::int64_t max_i_level = -1;
  std::int64_t max_level = -1;  // -1 is the sentinel "−∞" level
};

FiltrationData filtration_data(const Element& w);

/// Lexicographic comparison of lattice coordinates; compatible with addition.
std::strong_ordering gamma_cmp(const IntVec& a, const IntVec& b);

}  // namespace weyl
