#include "weyl/lattice.hpp"

#include <algorithm>
#include <utility>

#include "weyl/error.hpp"

namespace weyl {

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < ncols && pivot_row < rows.size(); ++c) {
    // Euclid on column c among rows pivot_row.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool reduced = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
        for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= q * rows[pivot_row][k];
        if (rows[r][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= q * rows[pivot_row][k];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

Lattice Lattice::from_generators(std::size_t ambient_dim, const std::vector<RatVec>& generators) {
  if (ambient_dim == 0) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be positive");
  if (generators.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
  Integer d = 1;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim)
      throw Error(ErrorCode::DimensionMismatch, "generator " + to_string(g) + " has wrong length");
    for (const auto& x : g) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<std::vector<Integer>> scaled;
  scaled.reserve(generators.size());
  for (const auto& g : generators) {
    std::vector<Integer> row;
    row.reserve(ambient_dim);
    for (const auto& x : g) row.emplace_back(x.get_num() * (d / x.get_den()));
    scaled.push_back(std::move(row));
  }
  auto hnf = hermite_normal_form(std::move(scaled));
  if (hnf.size() < ambient_dim)
    throw Error(ErrorCode::NondegenerateViolation,
                "generators span a subspace of rank " + std::to_string(hnf.size()) + " < " +
                    std::to_string(ambient_dim));

  Lattice lat;
  lat.generators_ = generators;
  lat.basis_ = Matrix(ambient_dim, ambient_dim);
  for (std::size_t r = 0; r < ambient_dim; ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c) {
      Rational x(hnf[r][c], d);
      x.canonicalize();
      lat.basis_(r, c) = x;
    }
  lat.basis_inverse_ = lat.basis_.inverse();
  // Smallest d with d·Γ ⊆ ℤ^ℓ.
  Integer dmin = 1;
  for (std::size_t r = 0; r < ambient_dim; ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c)
      mpz_lcm(dmin.get_mpz_t(), dmin.get_mpz_t(), lat.basis_(r, c).get_den_mpz_t());
  lat.denominator_ = dmin;
  return lat;
}

std::optional<IntVec> Lattice::coordinates(const RatVec& v) const {
  if (v.size() != ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                    std::to_string(ambient_dim()));
  RatVec n = v * basis_inverse_;
  IntVec out;
  out.reserve(n.size());
  for (const auto& x : n) {
    if (!is_integer(x) || !x.get_num().fits_slong_p()) return std::nullopt;
    out.push_back(x.get_num().get_si());
  }
  return out;
}

IntVec Lattice::require_coordinates(const RatVec& v) const {
  auto c = coordinates(v);
  if (!c) throw Error(ErrorCode::NotMember, to_string(v) + " is not in the lattice");
  return *std::move(c);
}

RatVec Lattice::point(const IntVec& coords) const {
  if (coords.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  RatVec out(ambient_dim(), Rational(0));
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    Rational n(static_cast<long>(coords[k]));
    for (std::size_t c = 0; c < ambient_dim(); ++c) out[c] += n * basis_(k, c);
  }
  return out;
}

bool BlockMatrix::has_block_shape(const Matrix& m, std::size_t ell1) {
  for (std::size_t r = 0; r < ell1; ++r)
    for (std::size_t c = ell1; c < m.cols(); ++c)
      if (m(r, c) != 0) return false;
  return true;
}

BlockMatrix::BlockMatrix(Matrix entries, std::size_t ell1, std::size_t ell2)
    : entries_(std::move(entries)), ell1_(ell1), ell2_(ell2) {
  if (entries_.rows() != ell1 + ell2 || entries_.cols() != ell1 + ell2)
    throw Error(ErrorCode::BlockShapeViolation, "matrix size does not match ell1 + ell2");
  if (!has_block_shape(entries_, ell1))
    throw Error(ErrorCode::BlockShapeViolation, "upper-right block is not zero");
  if ((ell1 && M().determinant() == 0) || (ell2 && Q().determinant() == 0))
    throw Error(ErrorCode::BlockShapeViolation, "diagonal block is singular");
}

BlockMatrix BlockMatrix::inverse() const { return {entries_.inverse(), ell1_, ell2_}; }

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.ell1_ != b.ell1_ || a.ell2_ != b.ell2_)
    throw Error(ErrorCode::DimensionMismatch, "block matrices with different splittings");
  return {a.entries_ * b.entries_, a.ell1_, a.ell2_};
}

Rational Character::at_coords(const IntVec& coords) const {
  if (coords.size() != values.size()) throw Error(ErrorCode::DimensionMismatch, "character/coordinate length");
  Rational out = 1;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) out *= pow(values[k], coords[k]);
  return out;
}

Rational pairing(const RatVec& alpha, const RatVec& del) {
  if (alpha.size() != del.size()) throw Error(ErrorCode::DimensionMismatch, "pairing of unequal lengths");
  return dot(alpha, del);
}

Matrix dual_derivation_basis(const Lattice& lattice, const std::vector<RatVec>& alphas) {
  const std::size_t n = lattice.ambient_dim();
  if (alphas.size() != n) throw Error(ErrorCode::DimensionMismatch, "need exactly ell basis points");
  for (const auto& a : alphas) lattice.require_coordinates(a);
  Matrix a = Matrix::from_rows(alphas);
  auto inv = a.try_inverse();
  if (!inv) throw Error(ErrorCode::SingularBasis, "chosen lattice points are linearly dependent");
  // a · Cᵗ = I  ⇒  C = (a⁻¹)ᵗ.
  return inv->transpose();
}

bool stabilizes(const Lattice& lattice, const Matrix& g) {
  const std::size_t n = lattice.ambient_dim();
  if (g.rows() != n || g.cols() != n) throw Error(ErrorCode::DimensionMismatch, "matrix/lattice dimension");
  // Coordinates of each basis row times G must be integral and form a
  // unimodular matrix.
  Matrix coords(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    auto c = lattice.coordinates(lattice.basis().row(r) * g);
    if (!c) return false;
    for (std::size_t k = 0; k < n; ++k) coords(r, k) = Rational(static_cast<long>((*c)[k]));
  }
  Rational det = coords.determinant();
  return det == 1 || det == -1;
}

bool aut2_membership(const Lattice& lattice, const BlockMatrix& g) { return stabilizes(lattice, g.entries()); }

Rational char_eval(const Lattice& lattice, const Character& f, const RatVec& alpha) {
  return f.at_coords(lattice.require_coordinates(alpha));
}

}  // namespace weyl
