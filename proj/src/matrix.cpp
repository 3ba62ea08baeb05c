#include "weyl/matrix.hpp"

#include <utility>

#include "weyl/error.hpp"

namespace weyl {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVec Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RatVec Matrix::col(std::size_t c) const {
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<RatVec> Matrix::row_list() const {
  std::vector<RatVec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

namespace {

// Gaussian elimination to row echelon form; returns (rank, determinant sign
// and pivot product folded into det).
std::pair<std::size_t, Rational> eliminate(Matrix& m) {
  std::size_t rank = 0;
  Rational det = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
      det = -det;
    }
    det *= m(rank, c);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      Rational factor = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(rank, k);
    }
    ++rank;
  }
  if (rank < m.rows() || rank < m.cols()) det = 0;
  return {rank, det};
}

}  // namespace

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  Matrix copy = *this;
  return eliminate(copy).second;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return eliminate(copy).first;
}

std::optional<Matrix> Matrix::try_inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(c, k));
        std::swap(inv(pivot, k), inv(c, k));
      }
    }
    Rational scale = 1 / a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) *= scale;
      inv(c, k) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational factor = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= factor * a(c, k);
        inv(r, k) -= factor * inv(c, k);
      }
    }
  }
  return inv;
}

Matrix Matrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  return *std::move(inv);
}

bool Matrix::is_integral() const {
  for (const auto& x : data_)
    if (!is_integer(x)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  return out;
}

RatVec operator*(const RatVec& v, const Matrix& a) {
  if (v.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix shape mismatch");
  RatVec out(a.cols(), Rational(0));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] += v[r] * a(r, c);
  }
  return out;
}

}  // namespace weyl
