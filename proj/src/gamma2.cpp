#include "matcut/gamma2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "matcut/errors.hpp"
#include "matcut/graph_structure.hpp"
#include "matcut/linalg.hpp"
#include "matcut/rng.hpp"

namespace matcut::gamma2 {

namespace {

void normalize(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  if (s <= 0.0) {
    v.assign(v.size(), 1.0 / std::sqrt(static_cast<double>(v.size())));
    return;
  }
  for (double& x : v) x /= s;
}

RealMatrix hadamard_rank_one(const RealMatrix& m, const std::vector<double>& u,
                             const std::vector<double>& v) {
  RealMatrix a(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      a(r, c) = m(r, c) * u[static_cast<std::size_t>(r)] * v[static_cast<std::size_t>(c)];
  return a;
}

// Solves (A + ridge I) X = B for symmetric positive semidefinite A.
RealMatrix solve_spd(RealMatrix a, const RealMatrix& b, double ridge) {
  const int n = a.rows();
  for (int attempt = 0; attempt < 6; ++attempt) {
    RealMatrix l = a;
    for (int i = 0; i < n; ++i) l(i, i) += ridge;
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) {
      double d = l(c, c);
      for (int k = 0; k < c; ++k) d -= l(c, k) * l(c, k);
      if (d <= 0.0) {
        ok = false;
        break;
      }
      d = std::sqrt(d);
      l(c, c) = d;
      for (int r = c + 1; r < n; ++r) {
        double s = l(r, c);
        for (int k = 0; k < c; ++k) s -= l(r, k) * l(c, k);
        l(r, c) = s / d;
      }
    }
    if (!ok) {
      ridge *= 100.0;
      continue;
    }
    RealMatrix x = b;
    const int cols = b.cols();
    for (int j = 0; j < cols; ++j) {
      for (int i = 0; i < n; ++i) {
        double s = x(i, j);
        for (int k = 0; k < i; ++k) s -= l(i, k) * x(k, j);
        x(i, j) = s / l(i, i);
      }
      for (int i = n - 1; i >= 0; --i) {
        double s = x(i, j);
        for (int k = i + 1; k < n; ++k) s -= l(k, i) * x(k, j);
        x(i, j) = s / l(i, i);
      }
    }
    return x;
  }
  throw NumericalError("solve_spd: Cholesky failed even with inflated ridge");
}

}  // namespace

double dual_objective(const RealMatrix& m, const std::vector<double>& u,
                      const std::vector<double>& v) {
  if (static_cast<int>(u.size()) != m.rows() || static_cast<int>(v.size()) != m.cols())
    throw ContractViolation("dual_objective: vector dimensions do not match");
  return linalg::trace_norm(hadamard_rank_one(m, u, v));
}

namespace {

// One projected ascent run; returns the best iterate value seen. Stops early
// once the best value has plateaued for twelve iterations.
DualWitness ascend(const RealMatrix& m, std::vector<double> u, std::vector<double> v,
                   int iterations) {
  normalize(u);
  normalize(v);
  DualWitness best;
  best.u = u;
  best.v = v;
  best.value = -1.0;
  int stale = 0;
  for (int iter = 0; iter <= iterations; ++iter) {
    const RealMatrix a = hadamard_rank_one(m, u, v);
    const linalg::SvdData s = linalg::svd(a);
    const double value = linalg::trace_norm(s);
    if (value > best.value + 1e-9) {
      best.value = value;
      best.u = u;
      best.v = v;
      stale = 0;
    } else if (++stale >= 12) {
      break;
    }
    if (iter == iterations) break;
    // Subgradient of the trace norm at A is P Q^T; chain through the
    // Hadamard structure A_ij = M_ij u_i v_j.
    const RealMatrix g = s.left.multiplied_by(s.right);
    const double step = 0.5 / std::sqrt(static_cast<double>(iter + 1));
    std::vector<double> gu(u.size(), 0.0), gv(v.size(), 0.0);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        const double w = g(r, c) * m(r, c);
        gu[static_cast<std::size_t>(r)] += w * v[static_cast<std::size_t>(c)];
        gv[static_cast<std::size_t>(c)] += w * u[static_cast<std::size_t>(r)];
      }
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += step * gu[i];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += step * gv[j];
    normalize(u);
    normalize(v);
  }
  return best;
}

}  // namespace

DualWitness gamma2_lower_dual(const BooleanMatrix& m, int restarts, int iterations,
                              std::uint64_t seed) {
  if (m.all_zero()) throw ContractViolation("gamma2_lower_dual: matrix is all zero");
  const RealMatrix mr = m.to_real();
  const int rows = m.rows();
  const int cols = m.cols();

  std::vector<std::pair<std::vector<double>, std::vector<double>>> starts;
  // Uniform start.
  starts.emplace_back(std::vector<double>(static_cast<std::size_t>(rows), 1.0),
                      std::vector<double>(static_cast<std::size_t>(cols), 1.0));
  // Degree-weighted start: u(i) = sqrt(d_i / f), v uniform.
  {
    std::vector<double> u(static_cast<std::size_t>(rows), 0.0);
    const double f = static_cast<double>(m.ones());
    for (int r = 0; r < rows; ++r)
      u[static_cast<std::size_t>(r)] = std::sqrt(static_cast<double>(m.row_ones(r)) / f);
    starts.emplace_back(std::move(u), std::vector<double>(static_cast<std::size_t>(cols), 1.0));
  }
  // Singleton on the first one entry; evaluates to exactly 1 for Boolean input.
  {
    std::vector<double> u(static_cast<std::size_t>(rows), 0.0);
    std::vector<double> v(static_cast<std::size_t>(cols), 0.0);
    bool placed = false;
    for (int r = 0; r < rows && !placed; ++r)
      for (int c = 0; c < cols && !placed; ++c)
        if (m.get(r, c)) {
          u[static_cast<std::size_t>(r)] = 1.0;
          v[static_cast<std::size_t>(c)] = 1.0;
          placed = true;
        }
    starts.emplace_back(std::move(u), std::move(v));
  }
  CounterRng rng(seed);
  for (int t = 0; t < restarts; ++t) {
    CounterRng sub = rng.derive(static_cast<std::uint64_t>(t));
    starts.emplace_back(sub.normal_vector(rows), sub.normal_vector(cols));
  }

  DualWitness best;
  best.value = -1.0;
  for (auto& [u, v] : starts) {
    DualWitness w = ascend(mr, std::move(u), std::move(v), iterations);
    if (w.value > best.value) best = std::move(w);
  }
  return best;
}

double gamma2_lower_normalized_trace(const BooleanMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return linalg::trace_norm(m.to_real()) /
         std::sqrt(static_cast<double>(m.rows()) * static_cast<double>(m.cols()));
}

Factorization gamma2_upper_als(const BooleanMatrix& m, int rank_cap, int iterations,
                               std::uint64_t seed) {
  (void)seed;  // initialization is deterministic (truncated SVD)
  if (m.all_zero()) throw ContractViolation("gamma2_upper_als: matrix is all zero");
  const RealMatrix target = m.to_real();
  const int k = std::clamp(rank_cap, 1, std::min(m.rows(), m.cols()));

  const linalg::SvdData s = linalg::svd(target);
  RealMatrix u(m.rows(), k), v(k, m.cols());
  for (int c = 0; c < k; ++c) {
    const double root = std::sqrt(std::max(0.0, s.singular_values[static_cast<std::size_t>(c)]));
    for (int r = 0; r < m.rows(); ++r) u(r, c) = s.left(r, c) * root;
    for (int j = 0; j < m.cols(); ++j) v(c, j) = s.right(c, j) * root;
  }

  Factorization best = make_factorization(u, v, target);
  rebalance(best);
  bool have_exact = best.reconstruction_error <= 1e-6;
  double best_product = have_exact ? best.product_norm() : std::numeric_limits<double>::infinity();

  const double ridge = 1e-10;
  for (int pass = 0; pass < iterations; ++pass) {
    // U-solve: U (V V^T + ridge) = M V^T, then V-solve with the fresh U.
    const RealMatrix vt = v.transposed();
    u = solve_spd(v.multiplied_by(vt), v.multiplied_by(target.transposed()), ridge).transposed();
    const RealMatrix ut = u.transposed();
    v = solve_spd(ut.multiplied_by(u), ut.multiplied_by(target), ridge);

    Factorization cand = make_factorization(u, v, target);
    rebalance(cand);
    if (cand.reconstruction_error <= 1e-6 && cand.product_norm() < best_product) {
      best = cand;
      best_product = cand.product_norm();
      have_exact = true;
    }
  }
  if (!have_exact)
    throw NumericalError("gamma2_upper_als: no iterate reached reconstruction error 1e-6; "
                         "rank cap is likely below the rank of M");
  return best;
}

double gamma2_psd_exact(const RealMatrix& a) {
  if (a.rows() != a.cols()) throw ContractViolation("gamma2_psd_exact: matrix must be square");
  const linalg::SpectralData spec = linalg::sym_eigen(a);
  const double lambda_min = spec.eigenvalues.empty() ? 0.0 : spec.eigenvalues.back();
  if (lambda_min < -1e-8)
    throw ContractViolation("gamma2_psd_exact: matrix is not PSD, lambda_min = " +
                            std::to_string(lambda_min));
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i) best = std::max(best, a(i, i));
  return best;
}

std::optional<Factorization> blowup_certificate(const BooleanMatrix& m) {
  if (m.all_zero()) return std::nullopt;
  const int rows = m.rows();
  // Group rows by identical support.
  std::vector<int> group(static_cast<std::size_t>(rows), -1);
  std::vector<int> reps;
  for (int r = 0; r < rows; ++r) {
    if (m.row_ones(r) == 0) continue;
    bool found = false;
    for (std::size_t g = 0; g < reps.size() && !found; ++g) {
      const int rep = reps[g];
      if (m.row_ones(rep) == m.row_ones(r) &&
          m.row_intersection_ones(rep, r) == m.row_ones(r)) {
        group[static_cast<std::size_t>(r)] = static_cast<int>(g);
        found = true;
      } else if (m.row_intersection_ones(rep, r) != 0) {
        return std::nullopt;  // overlapping but unequal supports
      }
    }
    if (!found) {
      group[static_cast<std::size_t>(r)] = static_cast<int>(reps.size());
      reps.push_back(r);
    }
  }

  const int k = static_cast<int>(reps.size());
  RealMatrix u(rows, k), v(k, m.cols());
  for (int r = 0; r < rows; ++r)
    if (group[static_cast<std::size_t>(r)] >= 0) u(r, group[static_cast<std::size_t>(r)]) = 1.0;
  for (int g = 0; g < k; ++g)
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(reps[static_cast<std::size_t>(g)], c)) v(g, c) = 1.0;
  Factorization f = make_factorization(std::move(u), std::move(v), m);
  if (f.reconstruction_error > 0.0) return std::nullopt;
  return f;
}

Gamma2Bracket gamma2_bracket(const BooleanMatrix& m, const Budget& budget, std::uint64_t seed) {
  if (m.all_zero()) throw ContractViolation("gamma2_bracket: matrix is all zero");
  Gamma2Bracket out;

  const linalg::SvdData s = linalg::svd(m.to_real());
  const double trace = linalg::trace_norm(s);
  out.normalized_trace =
      trace / std::sqrt(static_cast<double>(m.rows()) * static_cast<double>(m.cols()));
  out.rank = linalg::numerical_rank(s, m.rows(), m.cols());

  out.lower_witness = gamma2_lower_dual(m, budget.dual_restarts, budget.dual_iterations, seed);
  if (out.lower_witness.value >= out.normalized_trace) {
    out.lower = out.lower_witness.value;
    out.lower_route = "dual";
  } else {
    out.lower = out.normalized_trace;
    out.lower_route = "normalized-trace";
  }

  bool have_upper = false;
  auto consider = [&](Factorization f, const std::string& route) {
    if (!have_upper || f.product_norm() < out.upper_witness.product_norm()) {
      out.upper_witness = std::move(f);
      out.upper_route = route;
      have_upper = true;
    }
  };
  if (auto blowup = blowup_certificate(m)) consider(std::move(*blowup), "blowup");
  consider(graphs::degeneracy_split_factorization(m), "degeneracy-split");
  if (budget.als_iterations > 0) {
    try {
      consider(gamma2_upper_als(m, std::max(1, out.rank), budget.als_iterations, seed), "als");
    } catch (const NumericalError&) {
      // route skipped; the split certificate stands
    }
  }
  out.upper = out.upper_witness.product_norm();

  // The sqrt-rank bound needs a clean spectral gap to trust the integer rank.
  const double sigma_r = out.rank > 0 ? s.singular_values[static_cast<std::size_t>(out.rank - 1)] : 0.0;
  const double sigma_next = static_cast<std::size_t>(out.rank) < s.singular_values.size()
                                ? s.singular_values[static_cast<std::size_t>(out.rank)]
                                : 0.0;
  if (out.rank > 0 && sigma_r > 1e-6 && sigma_next < 1e-9) {
    out.sqrt_rank_bound = std::sqrt(static_cast<double>(out.rank));
    if (out.sqrt_rank_bound < out.upper) {
      out.upper = out.sqrt_rank_bound;
      out.upper_route = "sqrt-rank";
    }
  }

  if (out.lower > out.upper + 1e-6)
    throw NumericalError("gamma2_bracket: lower bound exceeds upper bound");
  return out;
}

}  // namespace matcut::gamma2
