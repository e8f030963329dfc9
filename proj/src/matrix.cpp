#include "maxplus/matrix.hpp"

#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(op) + ": shapes " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()) + " do not match");
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, ExtScalar fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
  if (rows == 0 || cols == 0)
    throw DimensionMismatch("matrix dimensions must be at least 1x1");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(0) {
  if (rows_ == 0)
    throw DimensionMismatch("matrix dimensions must be at least 1x1");
  cols_ = rows.begin()->size();
  if (cols_ == 0)
    throw DimensionMismatch("matrix dimensions must be at least 1x1");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw DimensionMismatch("matrix rows must all have the same length");
    for (double v : row) entries_.push_back(ExtScalar{v});
  }
}

Matrix Matrix::column(const Vec& entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n, ExtScalar{eps});
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ExtScalar{0.0};
  return m;
}

bool Matrix::row_is_eps(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (!(*this)(i, j).is_neg_inf()) return false;
  return true;
}

bool Matrix::col_is_eps(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_neg_inf()) return false;
  return true;
}

bool Matrix::has_pos_inf() const {
  for (ExtScalar v : entries_)
    if (v.is_pos_inf()) return true;
  return false;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix oplus(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "oplus");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = oplus(a(i, j), b(i, j));
  return out;
}

Matrix otimes(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("otimes: inner dimensions " +
                            std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()) + " do not match");
  Matrix out(a.rows(), b.cols(), ExtScalar{eps});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      ExtScalar acc{eps};
      for (std::size_t l = 0; l < a.cols(); ++l)
        acc = oplus(acc, otimes(a(i, l), b(l, j)));
      out(i, j) = acc;
    }
  return out;
}

Vec otimes(const Matrix& a, const Vec& x) {
  if (a.cols() != x.size())
    throw DimensionMismatch("otimes: matrix has " + std::to_string(a.cols()) +
                            " columns but vector has " +
                            std::to_string(x.size()) + " entries");
  Vec out(a.rows(), ExtScalar{eps});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ExtScalar acc{eps};
    for (std::size_t j = 0; j < a.cols(); ++j)
      acc = oplus(acc, otimes(a(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

bool leq(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "leq");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) <= b(i, j))) return false;
  return true;
}

bool leq(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("leq: vectors of length " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " do not match");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

}  // namespace maxplus
