#ifndef MATCUT_DISCREPANCY_HPP
#define MATCUT_DISCREPANCY_HPP

#include <cstdint>
#include <vector>

#include "matcut/boolean_matrix.hpp"
#include "matcut/factorization.hpp"

namespace matcut::disc {

struct DensityStats {
  double density = 0.0;
  long long ones = 0;
  std::vector<int> row_ones;
  std::vector<int> col_ones;
};
DensityStats density_stats(const BooleanMatrix& m);

// | |M[A x B]| - p(M) |A||B| | for a concrete witness.
struct DiscrepancyEstimate {
  double value = 0.0;
  SubmatrixSelection witness;
  bool exact = false;
};

double witness_deviation(const BooleanMatrix& m, const SubmatrixSelection& sel);

// Exact discrepancy by enumerating all subsets of the smaller side; for each
// subset the optimal other side is the positive- or negative-sum column set
// of M - p(M) J. Requires min(rows, cols) <= 16.
DiscrepancyEstimate disc_exact_small(const BooleanMatrix& m);

// Hyperplane rounding of the dual-style vectors built from a factorization of
// M; four sign-combination candidates per trial. Always a valid lower bound.
DiscrepancyEstimate disc_lower_rounding(const BooleanMatrix& m, const Factorization& f,
                                        int trials, std::uint64_t seed);

// ceil(m/2) x ceil(n/2) submatrix with density at most p(M); best of three
// candidate constructions (row-first greedy, column-first greedy, rounded
// witness resized by marginal sums).
SubmatrixSelection half_density_submatrix(const BooleanMatrix& m);

// Iterated halving until density <= delta/4, then pruning of heavy rows and
// columns. The output satisfies the per-row/per-column delta-fraction bounds
// exactly. Throws PartialResult when the iteration guard fires first.
struct SparsifyResult {
  SubmatrixSelection selection;
  int halvings = 0;
  double epsilon = 0.0;  // 1 - p(input), recorded for the run report
};
SparsifyResult sparsify(const BooleanMatrix& m, double delta, double gamma_hint);

}  // namespace matcut::disc

#endif
