#include "matcut/rectangle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "matcut/discrepancy.hpp"
#include "matcut/errors.hpp"
#include "matcut/gamma2.hpp"
#include "matcut/graph_structure.hpp"
#include "matcut/linalg.hpp"

namespace matcut::rect {

namespace {

constexpr double kTolerance = 1e-6;

std::vector<int> iota_vector(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Indices of the k smallest keys, ties by index, returned sorted.
std::vector<int> smallest_k_sorted(const std::vector<int>& keys, int k) {
  std::vector<int> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
  });
  idx.resize(static_cast<std::size_t>(k));
  std::sort(idx.begin(), idx.end());
  return idx;
}

Factorization zero_factorization(const BooleanMatrix& target) {
  return make_factorization(RealMatrix(target.rows(), 1), RealMatrix(1, target.cols()), target);
}

bool better_selection(const SubmatrixSelection& a, const SubmatrixSelection& b) {
  if (a.min_side() != b.min_side()) return a.min_side() > b.min_side();
  return a.area() > b.area();
}

// Witness factorization for the decrement chain: the exact blow-up
// certificate when the structure is there, the degeneracy split otherwise.
// The dual/ALS machinery is not needed to seed the pipeline.
Factorization pipeline_witness(const BooleanMatrix& m) {
  Factorization f = graphs::degeneracy_split_factorization(m);
  if (auto blowup = gamma2::blowup_certificate(m))
    if (blowup->product_norm() < f.product_norm()) return std::move(*blowup);
  return f;
}

}  // namespace

BrilliantWitness brilliant_scan(const BooleanMatrix& m, const Factorization& f) {
  if (m.all_zero()) throw ContractViolation("brilliant_scan: matrix is all zero");
  if (f.left.rows() != m.rows() || f.right.cols() != m.cols() ||
      f.reconstruction_error > kTolerance)
    throw ContractViolation("brilliant_scan: factorization does not certify M");

  const RealMatrix gram_rows = f.left.multiplied_by(f.left.transposed());
  for (int r = 0; r < m.rows(); ++r) {
    if (gram_rows(r, r) <= 1e-18) continue;  // zero factor vector
    double score = 0.0;
    for (int i = 0; i < m.rows(); ++i) score += gram_rows(r, i) * gram_rows(r, i);
    const double threshold = static_cast<double>(m.row_ones(r));
    if (score >= threshold - kTolerance)
      return BrilliantWitness{false, r, score, threshold};
  }
  const RealMatrix right_t = f.right.transposed();
  const RealMatrix gram_cols = right_t.multiplied_by(f.right);
  for (int c = 0; c < m.cols(); ++c) {
    if (gram_cols(c, c) <= 1e-18) continue;
    double score = 0.0;
    for (int j = 0; j < m.cols(); ++j) score += gram_cols(c, j) * gram_cols(c, j);
    const double threshold = static_cast<double>(m.col_ones(c));
    if (score >= threshold - kTolerance)
      return BrilliantWitness{true, c, score, threshold};
  }
  throw NumericalError("brilliant_scan: no witness found; factorization is numerically broken");
}

ProjectionOutcome project_step(const BooleanMatrix& m, const Factorization& f,
                               const BrilliantWitness& w) {
  ProjectionOutcome out;
  if (!w.is_column) {
    const int r = w.index;
    const double norm_sq = f.left.row_norm_squared(r);
    if (norm_sq <= 1e-18) throw ContractViolation("project_step: stale witness, factor vector is zero");
    RealMatrix u = f.left;
    const int k = u.cols();
    out.frob_before = u.frobenius_norm() * u.frobenius_norm();
    for (int i = 0; i < u.rows(); ++i) {
      double dot = 0.0;
      for (int d = 0; d < k; ++d) dot += f.left(i, d) * f.left(r, d);
      const double coeff = dot / norm_sq;
      for (int d = 0; d < k; ++d) u(i, d) -= coeff * f.left(r, d);
    }
    out.frob_after = u.frobenius_norm() * u.frobenius_norm();
    out.deleted = m.row_ones(r);
    for (int c = 0; c < m.cols(); ++c)
      if (!m.get(r, c)) out.kept.push_back(c);
    BooleanMatrix survivor(m.rows(), static_cast<int>(out.kept.size()));
    for (int i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < out.kept.size(); ++j)
        if (m.get(i, out.kept[j])) survivor.set(i, static_cast<int>(j), true);
    out.factorization = make_factorization(std::move(u), f.right.cols_subset(out.kept), survivor);
    out.matrix = std::move(survivor);
  } else {
    const int c = w.index;
    const double norm_sq = f.right.col_norm_squared(c);
    if (norm_sq <= 1e-18) throw ContractViolation("project_step: stale witness, factor vector is zero");
    RealMatrix v = f.right;
    const int k = v.rows();
    out.frob_before = v.frobenius_norm() * v.frobenius_norm();
    for (int j = 0; j < v.cols(); ++j) {
      double dot = 0.0;
      for (int d = 0; d < k; ++d) dot += f.right(d, j) * f.right(d, c);
      const double coeff = dot / norm_sq;
      for (int d = 0; d < k; ++d) v(d, j) -= coeff * f.right(d, c);
    }
    out.frob_after = v.frobenius_norm() * v.frobenius_norm();
    out.deleted = m.col_ones(c);
    for (int r = 0; r < m.rows(); ++r)
      if (!m.get(r, c)) out.kept.push_back(r);
    BooleanMatrix survivor(static_cast<int>(out.kept.size()), m.cols());
    for (std::size_t i = 0; i < out.kept.size(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m.get(out.kept[i], j)) survivor.set(static_cast<int>(i), j, true);
    out.factorization = make_factorization(f.left.rows_subset(out.kept), std::move(v), survivor);
    out.matrix = std::move(survivor);
  }
  return out;
}

namespace {

// Square off a block by truncating its larger side to the smaller one,
// keeping the lines with the fewest ones.
SubmatrixSelection square_off(const BooleanMatrix& block) {
  const int side = std::min(block.rows(), block.cols());
  std::vector<int> rows = block.rows() > side ? smallest_k_sorted(block.row_ones_all(), side)
                                              : iota_vector(block.rows());
  std::vector<int> cols = block.cols() > side ? smallest_k_sorted(block.col_ones_all(), side)
                                              : iota_vector(block.cols());
  return SubmatrixSelection::make(rows, cols, block.rows(), block.cols());
}

DecrementCertificate all_zero_certificate(const SubmatrixSelection& sel, const BooleanMatrix& block,
                                          double gamma) {
  DecrementCertificate cert;
  cert.selection = sel;
  cert.factorization = zero_factorization(block);
  cert.upper_before = gamma;
  cert.upper_after = 0.0;
  cert.all_zero_stop = true;
  return cert;
}

}  // namespace

DecrementCertificate gamma2_decrement_step(const BooleanMatrix& m, const Factorization& f,
                                           const RectangleConfig& cfg) {
  if (m.rows() == 0 || m.cols() == 0)
    throw ContractViolation("gamma2_decrement_step: matrix must be nonempty");
  if (m.all_zero()) throw ContractViolation("gamma2_decrement_step: matrix is all zero");
  if (2 * m.ones() > static_cast<long long>(m.rows()) * m.cols())
    throw ContractViolation("gamma2_decrement_step: density must be at most 1/2");
  if (f.left.rows() != m.rows() || f.right.cols() != m.cols() ||
      f.reconstruction_error > kTolerance)
    throw ContractViolation("gamma2_decrement_step: factorization does not certify M");

  Factorization balanced = f;
  rebalance(balanced);
  const double gamma = std::max(1.0, balanced.product_norm());

  SubmatrixSelection sel = SubmatrixSelection::full(m.rows(), m.cols());
  try {
    sel = disc::sparsify(m, cfg.sparsify_delta, gamma).selection;
  } catch (const PartialResult&) {
    // Degenerately small input; any zero cell certifies the decrement.
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (!m.get(r, c)) {
          SubmatrixSelection cell = SubmatrixSelection::make({r}, {c}, m.rows(), m.cols());
          return all_zero_certificate(cell, cell.extract(m), gamma);
        }
    throw;
  }
  BooleanMatrix cur = sel.extract(m);
  Factorization cur_f =
      restrict_factorization(balanced, sel.row_indices, sel.col_indices, cur);
  const int m0 = cur.rows();
  const int n0 = cur.cols();

  const int step_guard = m0 + n0 + 2;
  int stop_case = 0;  // 1: rows collapsed (prune right factor), 2: columns collapsed
  for (int step = 0; step < step_guard; ++step) {
    if (cur.all_zero()) return all_zero_certificate(sel, cur, gamma);
    if (2 * cur.rows() < m0) {
      stop_case = 1;
      break;
    }
    if (2 * cur.cols() < n0) {
      stop_case = 2;
      break;
    }
    const BrilliantWitness w = brilliant_scan(cur, cur_f);
    ProjectionOutcome outcome = project_step(cur, cur_f, w);
    SubmatrixSelection inner =
        w.is_column
            ? SubmatrixSelection::make(outcome.kept, iota_vector(cur.cols()), cur.rows(), cur.cols())
            : SubmatrixSelection::make(iota_vector(cur.rows()), outcome.kept, cur.rows(), cur.cols());
    sel = sel.compose(inner);
    cur = std::move(outcome.matrix);
    cur_f = std::move(outcome.factorization);
  }
  if (stop_case == 0)
    throw NumericalError("gamma2_decrement_step: projection loop failed to terminate");

  // Keep the factor lines whose squared norm fits the decremented budget.
  const double threshold = gamma - 1.0 / (4.0 * gamma);
  std::vector<int> kept_rows = iota_vector(cur.rows());
  std::vector<int> kept_cols = iota_vector(cur.cols());
  if (stop_case == 2) {
    kept_rows.clear();
    for (int r = 0; r < cur.rows(); ++r)
      if (cur_f.left.row_norm_squared(r) <= threshold + 1e-12) kept_rows.push_back(r);
  } else {
    kept_cols.clear();
    for (int c = 0; c < cur.cols(); ++c)
      if (cur_f.right.col_norm_squared(c) <= threshold + 1e-12) kept_cols.push_back(c);
  }
  if (kept_rows.empty() || kept_cols.empty()) {
    // Degenerate pruning; fall back to a single zero cell, which certifies 0.
    for (int r = 0; r < cur.rows(); ++r)
      for (int c = 0; c < cur.cols(); ++c)
        if (!cur.get(r, c)) {
          SubmatrixSelection cell =
              SubmatrixSelection::make({r}, {c}, cur.rows(), cur.cols());
          BooleanMatrix block = cell.extract(cur);
          return all_zero_certificate(sel.compose(cell), block, gamma);
        }
    throw NumericalError("gamma2_decrement_step: no zero cell available for fallback");
  }

  SubmatrixSelection pruned_sel =
      SubmatrixSelection::make(kept_rows, kept_cols, cur.rows(), cur.cols());
  BooleanMatrix pruned = pruned_sel.extract(cur);
  SubmatrixSelection squared = square_off(pruned);
  SubmatrixSelection final_local = pruned_sel.compose(squared);
  BooleanMatrix block = final_local.extract(cur);

  DecrementCertificate cert;
  cert.selection = sel.compose(final_local);
  cert.factorization =
      restrict_factorization(cur_f, final_local.row_indices, final_local.col_indices, block);
  cert.upper_before = gamma;
  cert.upper_after = cert.factorization.product_norm();
  cert.all_zero_stop = block.all_zero();

  if (2 * block.ones() > static_cast<long long>(block.rows()) * block.cols())
    throw NumericalError("gamma2_decrement_step: squared-off block exceeds density 1/2");
  if (cert.upper_after > std::sqrt(threshold * gamma) + kTolerance)
    throw NumericalError("gamma2_decrement_step: certificate norm bound violated");
  if (cert.factorization.reconstruction_error > kTolerance)
    throw NumericalError("gamma2_decrement_step: accumulated reconstruction error too large");
  return cert;
}

namespace {

struct SweepBest {
  int prefix = 0;
  int clean = 0;
  long long area() const { return static_cast<long long>(prefix) * clean; }
  int side() const { return std::min(prefix, clean); }
};

// Sorted-prefix sweep: add rows by ascending one count and track how many
// columns stay all-zero.
std::optional<SubmatrixSelection> zero_sweep_rows(const BooleanMatrix& m) {
  std::vector<int> order(static_cast<std::size_t>(m.rows()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return m.row_ones(a) < m.row_ones(b); });
  std::vector<int> hits(static_cast<std::size_t>(m.cols()), 0);
  int clean = m.cols();
  SweepBest best;
  for (int k = 0; k < m.rows(); ++k) {
    const int r = order[static_cast<std::size_t>(k)];
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c) && hits[static_cast<std::size_t>(c)]++ == 0) --clean;
    const SweepBest cand{k + 1, clean};
    if (cand.side() > best.side() || (cand.side() == best.side() && cand.area() > best.area()))
      best = cand;
  }
  if (best.clean == 0 || best.prefix == 0) return std::nullopt;

  std::vector<int> rows(order.begin(), order.begin() + best.prefix);
  std::sort(rows.begin(), rows.end());
  std::fill(hits.begin(), hits.end(), 0);
  for (int r : rows)
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) ++hits[static_cast<std::size_t>(c)];
  std::vector<int> cols;
  for (int c = 0; c < m.cols(); ++c)
    if (hits[static_cast<std::size_t>(c)] == 0) cols.push_back(c);
  return SubmatrixSelection::make(rows, cols, m.rows(), m.cols());
}

}  // namespace

SubmatrixSelection greedy_zero_rectangle(const BooleanMatrix& m) {
  std::optional<SubmatrixSelection> by_rows = zero_sweep_rows(m);
  std::optional<SubmatrixSelection> by_cols;
  if (auto t = zero_sweep_rows(m.transposed())) {
    std::swap(t->row_indices, t->col_indices);
    std::swap(t->parent_rows, t->parent_cols);
    by_cols = std::move(t);
  }
  if (!by_rows && !by_cols)
    throw ContractViolation("greedy_zero_rectangle: matrix has no zero entries");
  if (by_rows && (!by_cols || !better_selection(*by_cols, *by_rows))) return *by_rows;
  return *by_cols;
}

SubmatrixSelection greedy_ones_rectangle(const BooleanMatrix& m) {
  try {
    return greedy_zero_rectangle(m.complement());
  } catch (const ContractViolation&) {
    throw ContractViolation("greedy_ones_rectangle: matrix has no one entries");
  }
}

ZeroRectangleResult find_all_zeros_rectangle(const BooleanMatrix& m, const Budget& budget,
                                             const RectangleConfig& cfg,
                                             const std::optional<Factorization>& f0) {
  if (m.rows() == 0 || m.cols() == 0)
    throw ContractViolation("find_all_zeros_rectangle: matrix must be nonempty");
  if (2 * m.ones() > static_cast<long long>(m.rows()) * m.cols())
    throw ContractViolation("find_all_zeros_rectangle: density must be at most 1/2");

  ZeroRectangleResult out;
  if (m.all_zero()) {
    out.selection = SubmatrixSelection::full(m.rows(), m.cols());
    return out;
  }

  const SubmatrixSelection greedy = greedy_zero_rectangle(m);
  Factorization f = f0 ? *f0 : pipeline_witness(m);
  if (budget.als_iterations > 0 && !f0) {
    // A tighter certificate shortens the decrement chain; worth it at the
    // slower budgets.
    try {
      Factorization als = gamma2::gamma2_upper_als(m, std::min(m.rows(), m.cols()),
                                                   budget.als_iterations, /*seed=*/0);
      if (als.product_norm() < f.product_norm()) f = std::move(als);
    } catch (const NumericalError&) {
    }
  }
  if (f.left.rows() != m.rows() || f.right.cols() != m.cols() ||
      f.reconstruction_error > kTolerance)
    throw ContractViolation("find_all_zeros_rectangle: factorization does not certify M");

  const double gamma0 = std::max(1.0, f.product_norm());
  const int guard = static_cast<int>(std::ceil(cfg.guard_multiplier * gamma0 * gamma0));

  SubmatrixSelection sel = SubmatrixSelection::full(m.rows(), m.cols());
  BooleanMatrix cur = m;
  Factorization cur_f = std::move(f);
  std::optional<SubmatrixSelection> pipeline;
  for (int step = 0; step < guard; ++step) {
    DecrementCertificate cert = gamma2_decrement_step(cur, cur_f, cfg);
    out.gamma_trace.push_back(cert.upper_after);
    ++out.decrements;
    BooleanMatrix block = cert.selection.extract(cur);
    sel = sel.compose(cert.selection);
    if (block.all_zero()) {
      pipeline = sel;
      break;
    }
    cur = std::move(block);
    cur_f = std::move(cert.factorization);
  }
  if (!pipeline)
    throw PartialResult("find_all_zeros_rectangle: iteration guard exceeded", greedy);

  if (better_selection(greedy, *pipeline)) {
    out.selection = greedy;
    out.from_fallback = true;
  } else {
    out.selection = *pipeline;
  }
  if (!out.selection.extract(m).all_zero())
    throw NumericalError("find_all_zeros_rectangle: recount failed");
  return out;
}

ZeroRectangleResult find_allones_rectangle(const BooleanMatrix& m, const Budget& budget,
                                           const RectangleConfig& cfg) {
  if (m.rows() == 0 || m.cols() == 0)
    throw ContractViolation("find_allones_rectangle: matrix must be nonempty");
  if (m.all_zero()) throw ContractViolation("find_allones_rectangle: matrix has no one entries");

  ZeroRectangleResult out;
  if (m.is_all_ones()) {
    out.selection = SubmatrixSelection::full(m.rows(), m.cols());
    return out;
  }

  const SubmatrixSelection greedy = greedy_ones_rectangle(m);
  BooleanMatrix comp = m.complement();
  std::optional<SubmatrixSelection> found;
  try {
    if (2 * comp.ones() <= static_cast<long long>(comp.rows()) * comp.cols()) {
      ZeroRectangleResult r = find_all_zeros_rectangle(comp, budget, cfg);
      out.gamma_trace = std::move(r.gamma_trace);
      out.decrements = r.decrements;
      found = std::move(r.selection);
    } else {
      // Sparsify the complement below density 1/2 first.
      disc::SparsifyResult sp = disc::sparsify(comp, 0.49, /*gamma_hint=*/0.0);
      BooleanMatrix inner = sp.selection.extract(comp);
      ZeroRectangleResult r = find_all_zeros_rectangle(inner, budget, cfg);
      out.gamma_trace = std::move(r.gamma_trace);
      out.decrements = r.decrements;
      found = sp.selection.compose(r.selection);
    }
  } catch (const PartialResult&) {
    // fall back to the greedy sweep below
  }

  if (!found || better_selection(greedy, *found)) {
    out.selection = greedy;
    out.from_fallback = true;
  } else {
    out.selection = *found;
  }
  if (!out.selection.extract(m).is_all_ones())
    throw NumericalError("find_allones_rectangle: recount failed");
  return out;
}

MonoRectangle find_mono_rectangle(const BooleanMatrix& m, const Budget& budget,
                                  const RectangleConfig& cfg) {
  if (m.rows() == 0 || m.cols() == 0)
    throw ContractViolation("find_mono_rectangle: matrix must be nonempty");
  MonoRectangle out;
  if (2 * m.ones() <= static_cast<long long>(m.rows()) * m.cols()) {
    out.color = 0;
    try {
      out.details = find_all_zeros_rectangle(m, budget, cfg);
    } catch (const PartialResult& partial) {
      out.details.selection = partial.best_selection;
      out.details.from_fallback = true;
    }
  } else {
    out.color = 1;
    out.details = find_allones_rectangle(m, budget, cfg);
  }
  out.selection = out.details.selection;
  BooleanMatrix block = out.selection.extract(m);
  if (!(out.color == 0 ? block.all_zero() : block.is_all_ones()))
    throw NumericalError("find_mono_rectangle: recount failed");
  return out;
}

TraceToGammaResult trace_to_gamma_submatrix(const RealMatrix& m, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.5))
    throw ContractViolation("trace_to_gamma_submatrix: epsilon must lie in (0, 1/2]");
  if (m.rows() == 0 || m.cols() == 0)
    throw ContractViolation("trace_to_gamma_submatrix: matrix must be nonempty");

  const linalg::SvdData s = linalg::svd(m);
  const double gamma = linalg::trace_norm(s) /
                       std::sqrt(static_cast<double>(m.rows()) * static_cast<double>(m.cols()));
  const int k = static_cast<int>(s.singular_values.size());
  RealMatrix u(m.rows(), k), v(k, m.cols());
  for (int c = 0; c < k; ++c) {
    const double root = std::sqrt(std::max(0.0, s.singular_values[static_cast<std::size_t>(c)]));
    for (int r = 0; r < m.rows(); ++r) u(r, c) = s.left(r, c) * root;
    for (int j = 0; j < m.cols(); ++j) v(c, j) = s.right(c, j) * root;
  }

  auto keep_smallest_norms = [](const RealMatrix& factor, bool rows, int count) {
    const int n = rows ? factor.rows() : factor.cols();
    std::vector<double> norms(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      norms[static_cast<std::size_t>(i)] =
          rows ? factor.row_norm_squared(i) : factor.col_norm_squared(i);
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return norms[static_cast<std::size_t>(a)] < norms[static_cast<std::size_t>(b)];
    });
    idx.resize(static_cast<std::size_t>(count));
    std::sort(idx.begin(), idx.end());
    return idx;
  };

  const int keep_rows =
      std::max(1, static_cast<int>(std::ceil((1.0 - epsilon) * m.rows() - 1e-12)));
  const int keep_cols =
      std::max(1, static_cast<int>(std::ceil((1.0 - epsilon) * m.cols() - 1e-12)));

  TraceToGammaResult out;
  out.gamma = gamma;
  out.certified_bound = gamma / epsilon;
  out.selection = SubmatrixSelection::make(keep_smallest_norms(u, true, keep_rows),
                                           keep_smallest_norms(v, false, keep_cols),
                                           m.rows(), m.cols());
  const RealMatrix target = m.submatrix(out.selection.row_indices, out.selection.col_indices);
  out.factorization = make_factorization(u.rows_subset(out.selection.row_indices),
                                         v.cols_subset(out.selection.col_indices), target);
  if (out.factorization.product_norm() > out.certified_bound + kTolerance)
    throw NumericalError("trace_to_gamma_submatrix: certified bound violated");
  return out;
}

ConstantRectangle constant_submatrix_integer(const RealMatrix& m, const Budget& budget,
                                             const RectangleConfig& cfg) {
  if (m.rows() == 0 || m.cols() == 0)
    throw ContractViolation("constant_submatrix_integer: matrix must be nonempty");

  std::map<long long, long long> counts;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const double e = m(r, c);
      const long long v = std::llround(e);
      if (std::abs(e - static_cast<double>(v)) > 1e-9)
        throw ContractViolation("constant_submatrix_integer: entries must be integers");
      ++counts[v];
    }
  long long t = counts.begin()->first;
  long long best_count = counts.begin()->second;
  for (const auto& [value, count] : counts)
    if (count > best_count) {  // ties keep the lowest value
      t = value;
      best_count = count;
    }

  // Indicator of "entry differs from t", written through the interpolation
  // polynomial over the observed value set when that stays numerically tame.
  BooleanMatrix n(m.rows(), m.cols());
  if (counts.size() >= 2 && counts.size() <= 30) {
    double c_coeff = 1.0;
    for (const auto& [value, count] : counts) {
      (void)count;
      if (value != t) c_coeff *= static_cast<double>(t - value);
    }
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        double prod = 1.0;
        const long long e = std::llround(m(r, c));
        for (const auto& [value, count] : counts) {
          (void)count;
          if (value != t) prod *= static_cast<double>(e - value);
        }
        const double q = 1.0 - prod / c_coeff;
        if (std::abs(q - (e != t ? 1.0 : 0.0)) > 1e-6)
          throw NumericalError("constant_submatrix_integer: interpolation polynomial drifted");
        if (q > 0.5) n.set(r, c, true);
      }
  } else {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (std::llround(m(r, c)) != t) n.set(r, c, true);
  }

  ConstantRectangle out;
  out.value = t;
  std::optional<SubmatrixSelection> found;
  try {
    if (2 * n.ones() <= static_cast<long long>(n.rows()) * n.cols()) {
      found = find_all_zeros_rectangle(n, budget, cfg).selection;
    } else {
      disc::SparsifyResult sp = disc::sparsify(n, 0.4, /*gamma_hint=*/0.0);
      BooleanMatrix inner = sp.selection.extract(n);
      try {
        found = sp.selection.compose(find_all_zeros_rectangle(inner, budget, cfg).selection);
      } catch (const PartialResult& partial) {
        // Carried selection indexes into the sparsified block.
        found = sp.selection.compose(partial.best_selection);
      }
    }
  } catch (const PartialResult& partial) {
    found = partial.best_selection;  // indexes into n
  }
  SubmatrixSelection greedy = greedy_zero_rectangle(n);
  out.selection = (found && better_selection(*found, greedy)) ? *found : greedy;

  for (int r : out.selection.row_indices)
    for (int c : out.selection.col_indices)
      if (std::llround(m(r, c)) != t)
        throw NumericalError("constant_submatrix_integer: recount failed");
  return out;
}

}  // namespace matcut::rect
