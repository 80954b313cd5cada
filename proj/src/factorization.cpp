#include "matcut/factorization.hpp"

#include <cmath>

#include "matcut/errors.hpp"

namespace matcut {

Factorization make_factorization(RealMatrix left, RealMatrix right, const RealMatrix& target) {
  if (left.cols() != right.rows())
    throw ContractViolation("factorization: inner dimensions do not match");
  if (left.rows() != target.rows() || right.cols() != target.cols())
    throw ContractViolation("factorization: outer dimensions do not match target");
  Factorization f;
  f.left = std::move(left);
  f.right = std::move(right);
  f.max_row_norm = f.left.max_row_norm();
  f.max_col_norm = f.right.max_col_norm();
  f.reconstruction_error = max_abs_diff(f.product(), target);
  return f;
}

Factorization make_factorization(RealMatrix left, RealMatrix right, const BooleanMatrix& target) {
  return make_factorization(std::move(left), std::move(right), target.to_real());
}

void rebalance(Factorization& f) {
  if (f.max_row_norm <= 0.0 || f.max_col_norm <= 0.0) return;
  const double s = std::sqrt(f.max_col_norm / f.max_row_norm);
  f.left.scale(s);
  f.right.scale(1.0 / s);
  const double balanced = std::sqrt(f.max_row_norm * f.max_col_norm);
  f.max_row_norm = balanced;
  f.max_col_norm = balanced;
}

Factorization restrict_factorization(const Factorization& f, const std::vector<int>& row_idx,
                                     const std::vector<int>& col_idx,
                                     const BooleanMatrix& new_target) {
  return make_factorization(f.left.rows_subset(row_idx), f.right.cols_subset(col_idx), new_target);
}

Factorization combine_sum(const Factorization& a, const Factorization& b,
                          const RealMatrix& target) {
  const double pa = a.product_norm();
  const double pb = b.product_norm();
  // A zero part contributes nothing; pass the other through.
  if (pa == 0.0) return make_factorization(b.left, b.right, target);
  if (pb == 0.0) return make_factorization(a.left, a.right, target);

  // Balanced parts stack to row/col norms of at most sqrt(pa + pb) each.
  Factorization ab = a;
  Factorization bb = b;
  rebalance(ab);
  rebalance(bb);

  const int m = ab.left.rows();
  const int ka = ab.left.cols();
  const int kb = bb.left.cols();
  const int n = ab.right.cols();
  RealMatrix left(m, ka + kb);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < ka; ++c) left(r, c) = ab.left(r, c);
    for (int c = 0; c < kb; ++c) left(r, ka + c) = bb.left(r, c);
  }
  RealMatrix right(ka + kb, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < ka; ++r) right(r, c) = ab.right(r, c);
    for (int r = 0; r < kb; ++r) right(ka + r, c) = bb.right(r, c);
  }
  return make_factorization(std::move(left), std::move(right), target);
}

Factorization complement_factorization(const Factorization& of_m, const BooleanMatrix& complement) {
  const int m = of_m.left.rows();
  const int n = of_m.right.cols();
  // J as a rank-1 factorization, minus the factors of M.
  Factorization ones = make_factorization(RealMatrix(m, 1, 1.0), RealMatrix(1, n, 1.0),
                                          BooleanMatrix::all_ones(m, n));
  Factorization neg = of_m;
  neg.left.scale(-1.0);
  return combine_sum(ones, neg, complement.to_real());
}

}  // namespace matcut
