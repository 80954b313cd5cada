#ifndef MATCUT_GAMMA2_HPP
#define MATCUT_GAMMA2_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matcut/boolean_matrix.hpp"
#include "matcut/budget.hpp"
#include "matcut/factorization.hpp"

namespace matcut::gamma2 {

// Unit-vector pair witnessing a dual lower bound ||M o (u v^T)||_tr.
struct DualWitness {
  double value = 0.0;
  std::vector<double> u;
  std::vector<double> v;
};

// Certified two-sided interval on the factorization norm.
struct Gamma2Bracket {
  double lower = 0.0;
  double upper = 0.0;
  DualWitness lower_witness;
  Factorization upper_witness;  // best factorization-backed bound
  std::string lower_route;
  std::string upper_route;
  double normalized_trace = 0.0;
  double sqrt_rank_bound = 0.0;  // 0 when the rank route was not usable
  int rank = 0;
};

// ||M o (u v^T)||_tr = ||diag(u) M diag(v)||_tr for arbitrary real M.
double dual_objective(const RealMatrix& m, const std::vector<double>& u,
                      const std::vector<double>& v);

// Projected subgradient ascent over unit-sphere pairs, best over `restarts`
// random starts plus three deterministic ones (uniform, degree-weighted, and
// a singleton on the first one entry). Any evaluated pair is a valid witness,
// so the returned value is always a sound lower bound.
DualWitness gamma2_lower_dual(const BooleanMatrix& m, int restarts, int iterations,
                              std::uint64_t seed);

// trace_norm(M) / sqrt(m n).
double gamma2_lower_normalized_trace(const BooleanMatrix& m);

// Alternating least squares at a fixed inner dimension, initialized from the
// truncated SVD and rebalanced each pass. The result reconstructs M within
// 1e-6; its norm product certifies an upper bound.
Factorization gamma2_upper_als(const BooleanMatrix& m, int rank_cap, int iterations,
                               std::uint64_t seed);

// Exact value for a positive semidefinite matrix: the maximum diagonal entry.
double gamma2_psd_exact(const RealMatrix& a);

// Exact product-norm-1 factorization when M is a blow-up of a permutation
// matrix (row supports pairwise equal or disjoint), otherwise nullopt.
std::optional<Factorization> blowup_certificate(const BooleanMatrix& m);

Gamma2Bracket gamma2_bracket(const BooleanMatrix& m, const Budget& budget, std::uint64_t seed);

}  // namespace matcut::gamma2

#endif
