#ifndef MATCUT_RECTANGLE_HPP
#define MATCUT_RECTANGLE_HPP

#include <optional>
#include <vector>

#include "matcut/boolean_matrix.hpp"
#include "matcut/budget.hpp"
#include "matcut/factorization.hpp"

namespace matcut::rect {

// Knobs behind the asymptotic constants; the defaults are the shipped values.
struct RectangleConfig {
  double sparsify_delta = 0.1;   // per-row/column fraction inside the decrement step
  double guard_multiplier = 4.0; // decrement iterations allowed: ceil(mult * gamma^2)
};

// A row (or column) whose factor vector satisfies the projection-progress
// inequality sum_i <u_r, u_i>^2 >= d_r.
struct BrilliantWitness {
  bool is_column = false;
  int index = 0;
  double score = 0.0;
  double threshold = 0.0;
};

// Scans rows first (lowest index), then columns. A factorization that
// reconstructs M within 1e-6 always admits a witness; failure signals a
// numerically broken factorization.
BrilliantWitness brilliant_scan(const BooleanMatrix& m, const Factorization& f);

struct ProjectionOutcome {
  BooleanMatrix matrix;          // surviving submatrix
  Factorization factorization;   // reconstructs `matrix`
  std::vector<int> kept;         // surviving indices on the deleted side
  int deleted = 0;               // t, the witness line's one count
  double frob_before = 0.0;      // ||factor||_F^2 on the projected side
  double frob_after = 0.0;
};

// Projects the witness side's factor vectors orthogonal to the witness vector
// and deletes the lines where the witness line carries a one.
ProjectionOutcome project_step(const BooleanMatrix& m, const Factorization& f,
                               const BrilliantWitness& w);

struct DecrementCertificate {
  SubmatrixSelection selection;  // into the input matrix
  Factorization factorization;   // reconstructs the selected submatrix
  double upper_before = 0.0;
  double upper_after = 0.0;      // <= sqrt((gamma - 1/(4 gamma)) * gamma) + 1e-6
  bool all_zero_stop = false;
};

// One norm-decrement round: sparsify, iterate brilliant projections until a
// stopping condition, prune heavy factor lines, square off.
// Requires a nonzero input with density at most 1/2 and a certifying F.
DecrementCertificate gamma2_decrement_step(const BooleanMatrix& m, const Factorization& f,
                                           const RectangleConfig& cfg = {});

struct ZeroRectangleResult {
  SubmatrixSelection selection;
  std::vector<double> gamma_trace;  // certified upper bound after each decrement
  int decrements = 0;
  bool from_fallback = false;       // greedy sweep beat the decrement chain
};

// Iterates gamma2_decrement_step until the all-zero stop fires; the result is
// recount-verified. Throws PartialResult (carrying the greedy-sweep rectangle)
// if the iteration guard is exceeded. Requires density at most 1/2.
ZeroRectangleResult find_all_zeros_rectangle(const BooleanMatrix& m, const Budget& budget,
                                             const RectangleConfig& cfg = {},
                                             const std::optional<Factorization>& f0 = std::nullopt);

// All-ones analogue: works on the complement, sparsifying it first when its
// density exceeds 1/2.
ZeroRectangleResult find_allones_rectangle(const BooleanMatrix& m, const Budget& budget,
                                           const RectangleConfig& cfg = {});

struct MonoRectangle {
  SubmatrixSelection selection;
  int color = 0;
  ZeroRectangleResult details;
};

// Routes by density: zeros of M when at most half the entries are ones,
// otherwise ones via the complement. Total: a verified selection is always
// returned (greedy fallback backs the pipeline).
MonoRectangle find_mono_rectangle(const BooleanMatrix& m, const Budget& budget,
                                  const RectangleConfig& cfg = {});

// Largest monochromatic rectangle reachable by the sorted-prefix sweep, used
// as the fallback everywhere. Throws if no cell of the color exists.
SubmatrixSelection greedy_zero_rectangle(const BooleanMatrix& m);
SubmatrixSelection greedy_ones_rectangle(const BooleanMatrix& m);

struct TraceToGammaResult {
  SubmatrixSelection selection;
  Factorization factorization;
  double certified_bound = 0.0;  // gamma / epsilon
  double gamma = 0.0;            // trace_norm / sqrt(mn) of the input
};

// Keeps the (1-eps) fraction of SVD factor rows/columns with the smallest
// norms; the restriction certifies gamma_2 <= gamma/eps on the submatrix.
TraceToGammaResult trace_to_gamma_submatrix(const RealMatrix& m, double epsilon);

struct ConstantRectangle {
  SubmatrixSelection selection;
  long long value = 0;
};

// Constant submatrix of an integer matrix: maps the most frequent value to
// zero through an interpolation polynomial and reuses the all-zeros pipeline.
ConstantRectangle constant_submatrix_integer(const RealMatrix& m, const Budget& budget,
                                             const RectangleConfig& cfg = {});

}  // namespace matcut::rect

#endif
