#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "maxplus/ext_scalar.hpp"

namespace maxplus {

/// A vector over R ∪ {-inf, +inf}; comparisons are componentwise.
using Vec = std::vector<ExtScalar>;

/// Dense row-major matrix over R ∪ {-inf, +inf}.  Both dimensions must be
/// at least 1; a column vector is an n x 1 matrix.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, ExtScalar fill = ExtScalar{});

  /// Brace construction row by row: Matrix{{0, eps}, {3, -1}}.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix column(const Vec& entries);

  /// Max-plus identity: e = 0 on the diagonal, ε elsewhere.
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  ExtScalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  ExtScalar operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool row_is_eps(std::size_t i) const;
  bool col_is_eps(std::size_t j) const;
  bool has_pos_inf() const;

  /// Equal dimensions and componentwise equal values.
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Vec entries_;
};

/// Componentwise ⊕ (max); dimensions must agree.
Matrix oplus(const Matrix& a, const Matrix& b);

/// Max-plus product: (a ⊗ b)_ij = max_k (a_ik + b_kj).
Matrix otimes(const Matrix& a, const Matrix& b);

/// Matrix-vector product A ⊗ x.
Vec otimes(const Matrix& a, const Vec& x);

/// Componentwise order a <= b.
bool leq(const Matrix& a, const Matrix& b);
bool leq(const Vec& a, const Vec& b);

/// Spelled-out aliases for the matrix operations.
inline Matrix mat_oplus(const Matrix& a, const Matrix& b) { return oplus(a, b); }
inline Matrix mat_otimes(const Matrix& a, const Matrix& b) {
  return otimes(a, b);
}

}  // namespace maxplus
