#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Dense row-major matrix over the rationals. Small (ℓ×ℓ) in every use.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec col(std::size_t c) const;
  std::vector<RatVec> row_list() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Rational determinant() const;
  /// Throws Error(SingularMatrix) when not invertible.
  Matrix inverse() const;
  std::optional<Matrix> try_inverse() const;
  std::size_t rank() const;

  bool is_integral() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row vector times matrix: (v·A)_c = Σ_r v_r A_{rc}.
RatVec operator*(const RatVec& v, const Matrix& a);

}  // namespace weyl
