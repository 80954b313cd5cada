#ifndef MATCUT_FACTORIZATION_HPP
#define MATCUT_FACTORIZATION_HPP

#include <vector>

#include "matcut/boolean_matrix.hpp"
#include "matcut/real_matrix.hpp"

namespace matcut {

// A pair of factors with target = left * right, carrying the norm caches that
// certify the factorization-norm upper bound product_norm().
struct Factorization {
  RealMatrix left;   // m x k
  RealMatrix right;  // k x n
  double max_row_norm = 0.0;        // max l2 row norm of left
  double max_col_norm = 0.0;        // max l2 column norm of right
  double reconstruction_error = 0.0;  // ||left*right - target||_max

  double product_norm() const { return max_row_norm * max_col_norm; }
  int inner_dim() const { return left.cols(); }
  RealMatrix product() const { return left.multiplied_by(right); }
};

Factorization make_factorization(RealMatrix left, RealMatrix right, const RealMatrix& target);
Factorization make_factorization(RealMatrix left, RealMatrix right, const BooleanMatrix& target);

// Scalar rescale so max_row_norm == max_col_norm; the product is unchanged.
void rebalance(Factorization& f);

// Restriction to a row/column subset of the target; factors keep their inner
// dimension, so the certified product can only shrink.
Factorization restrict_factorization(const Factorization& f, const std::vector<int>& row_idx,
                                     const std::vector<int>& col_idx,
                                     const BooleanMatrix& new_target);

// Stacked factorization of a + b from factorizations of the parts, scaled so
// the product norm is 2*sqrt(pa*pb) <= pa + pb for part products pa, pb.
Factorization combine_sum(const Factorization& a, const Factorization& b,
                          const RealMatrix& target);

// Factorization of the all-ones complement J - M given one of M.
Factorization complement_factorization(const Factorization& of_m, const BooleanMatrix& complement);

}  // namespace matcut

#endif
