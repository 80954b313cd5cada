#ifndef MATCUT_REAL_MATRIX_HPP
#define MATCUT_REAL_MATRIX_HPP

#include <vector>

namespace matcut {

// Dense row-major matrix of doubles. All entries are required to stay finite;
// construction and the checked helpers enforce it.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(int rows, int cols, double fill = 0.0);

  static RealMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  RealMatrix transposed() const;
  RealMatrix multiplied_by(const RealMatrix& other) const;
  void scale(double factor);

  double frobenius_norm() const;
  double max_abs() const;
  double max_row_norm() const;  // max l2 norm over rows
  double max_col_norm() const;  // max l2 norm over columns
  double row_norm_squared(int r) const;
  double col_norm_squared(int c) const;

  bool is_finite() const;
  bool is_symmetric(double tol) const;

  RealMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
  RealMatrix rows_subset(const std::vector<int>& row_idx) const;
  RealMatrix cols_subset(const std::vector<int>& col_idx) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

double max_abs_diff(const RealMatrix& a, const RealMatrix& b);
double frobenius_inner(const RealMatrix& a, const RealMatrix& b);

}  // namespace matcut

#endif
