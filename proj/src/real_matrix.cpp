#include "matcut/real_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "matcut/errors.hpp"

namespace matcut {

RealMatrix::RealMatrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0) throw ContractViolation("matrix dimensions must be nonnegative");
}

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transposed() const {
  RealMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RealMatrix RealMatrix::multiplied_by(const RealMatrix& other) const {
  if (cols_ != other.rows_) throw ContractViolation("inner dimensions do not match");
  RealMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const double v = (*this)(r, k);
      if (v == 0.0) continue;
      const double* src = &other.a_[static_cast<std::size_t>(k) * other.cols_];
      double* dst = &out.a_[static_cast<std::size_t>(r) * other.cols_];
      for (int c = 0; c < other.cols_; ++c) dst[c] += v * src[c];
    }
  }
  return out;
}

void RealMatrix::scale(double factor) {
  for (auto& x : a_) x *= factor;
}

double RealMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

double RealMatrix::max_abs() const {
  double s = 0.0;
  for (double x : a_) s = std::max(s, std::abs(x));
  return s;
}

double RealMatrix::row_norm_squared(int r) const {
  double s = 0.0;
  for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * (*this)(r, c);
  return s;
}

double RealMatrix::col_norm_squared(int c) const {
  double s = 0.0;
  for (int r = 0; r < rows_; ++r) s += (*this)(r, c) * (*this)(r, c);
  return s;
}

double RealMatrix::max_row_norm() const {
  double best = 0.0;
  for (int r = 0; r < rows_; ++r) best = std::max(best, row_norm_squared(r));
  return std::sqrt(best);
}

double RealMatrix::max_col_norm() const {
  double best = 0.0;
  for (int c = 0; c < cols_; ++c) best = std::max(best, col_norm_squared(c));
  return std::sqrt(best);
}

bool RealMatrix::is_finite() const {
  for (double x : a_)
    if (!std::isfinite(x)) return false;
  return true;
}

bool RealMatrix::is_symmetric(double tol) const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if (std::abs((*this)(r, c) - (*this)(c, r)) > tol) return false;
  return true;
}

RealMatrix RealMatrix::submatrix(const std::vector<int>& row_idx,
                                 const std::vector<int>& col_idx) const {
  RealMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = (*this)(row_idx[i], col_idx[j]);
  return out;
}

RealMatrix RealMatrix::rows_subset(const std::vector<int>& row_idx) const {
  RealMatrix out(static_cast<int>(row_idx.size()), cols_);
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (int c = 0; c < cols_; ++c) out(static_cast<int>(i), c) = (*this)(row_idx[i], c);
  return out;
}

RealMatrix RealMatrix::cols_subset(const std::vector<int>& col_idx) const {
  RealMatrix out(rows_, static_cast<int>(col_idx.size()));
  for (int r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out(r, static_cast<int>(j)) = (*this)(r, col_idx[j]);
  return out;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ContractViolation("dimension mismatch in max_abs_diff");
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    s = std::max(s, std::abs(a.data()[i] - b.data()[i]));
  return s;
}

double frobenius_inner(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ContractViolation("dimension mismatch in frobenius_inner");
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) s += a.data()[i] * b.data()[i];
  return s;
}

}  // namespace matcut
