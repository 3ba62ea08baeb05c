#pragma once

// Finitely generated nondegenerate subgroups Γ ⊂ ℚ^ℓ, their block-form
// automorphisms, dual derivation bases and multiplicative characters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "weyl/matrix.hpp"
#include "weyl/rational.hpp"

namespace weyl {

using IntVec = std::vector<std::int64_t>;

/// A full-rank subgroup of ℚ^ℓ stored through its canonical ℤ-basis: the
/// row Hermite normal form of d·(generators), divided by d, where d is the
/// lcm of all generator denominators. Equal subgroups compare equal.
class Lattice {
 public:
  /// Throws EmptyGenerators, DimensionMismatch or NondegenerateViolation.
  static Lattice from_generators(std::size_t ambient_dim, const std::vector<RatVec>& generators);

  std::size_t ambient_dim() const { return basis_.rows(); }
  const std::vector<RatVec>& generators() const { return generators_; }
  const Matrix& basis() const { return basis_; }
  const Integer& denominator() const { return denominator_; }

  /// Integer coordinates n with n·basis = v, or nullopt when v ∉ Γ.
  /// Throws DimensionMismatch.
  std::optional<IntVec> coordinates(const RatVec& v) const;
  /// Like coordinates() but throws Error(NotMember).
  IntVec require_coordinates(const RatVec& v) const;
  /// n·basis.
  RatVec point(const IntVec& coords) const;

  bool contains(const RatVec& v) const { return coordinates(v).has_value(); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  Lattice() = default;

  std::vector<RatVec> generators_;
  Matrix basis_;
  Matrix basis_inverse_;
  Integer denominator_;
};

/// Row-style Hermite normal form of an integer matrix: echelon form with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows);

/// G = (M 0; P Q) with M ∈ GL_{ℓ₁}, Q ∈ GL_{ℓ₂}.
class BlockMatrix {
 public:
  /// Throws BlockShapeViolation when the upper-right block is nonzero or a
  /// diagonal block is singular.
  BlockMatrix(Matrix entries, std::size_t ell1, std::size_t ell2);

  std::size_t ell1() const { return ell1_; }
  std::size_t ell2() const { return ell2_; }
  std::size_t dim() const { return ell1_ + ell2_; }
  const Matrix& entries() const { return entries_; }
  Matrix M() const { return entries_.block(0, 0, ell1_, ell1_); }
  Matrix P() const { return entries_.block(ell1_, 0, ell2_, ell1_); }
  Matrix Q() const { return entries_.block(ell1_, ell1_, ell2_, ell2_); }

  BlockMatrix inverse() const;
  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
    return a.ell1_ == b.ell1_ && a.entries_ == b.entries_;
  }

  static bool has_block_shape(const Matrix& m, std::size_t ell1);

 private:
  Matrix entries_;
  std::size_t ell1_;
  std::size_t ell2_;
};

/// Multiplicative function Γ → ℚ*, determined by its values on the
/// canonical basis rows.
struct Character {
  RatVec values;

  static Character trivial(std::size_t dim) { return {RatVec(dim, Rational(1))}; }

  /// Π values[k]^{n_k}.
  Rational at_coords(const IntVec& coords) const;

  friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

/// Σ_p a_p α_p.
Rational pairing(const RatVec& alpha, const RatVec& del);

/// Rows of the result express the dual derivations d_p in the standard
/// ∂-basis, so that ⟨alphas[p], row q⟩ = δ_{pq}. Throws SingularBasis.
Matrix dual_derivation_basis(const Lattice& lattice, const std::vector<RatVec>& alphas);

/// Γ·G = Γ.
bool stabilizes(const Lattice& lattice, const Matrix& g);
/// Block form plus Γ·G = Γ.
bool aut2_membership(const Lattice& lattice, const BlockMatrix& g);

/// Throws NotMember when alpha ∉ Γ.
Rational char_eval(const Lattice& lattice, const Character& f, const RatVec& alpha);

}  // namespace weyl
