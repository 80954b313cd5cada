#include "matcut/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>

#include "matcut/errors.hpp"
#include "matcut/graph_structure.hpp"
#include "matcut/rng.hpp"

namespace matcut::disc {

DensityStats density_stats(const BooleanMatrix& m) {
  DensityStats s;
  s.density = m.density();
  s.ones = m.ones();
  s.row_ones = m.row_ones_all();
  s.col_ones = m.col_ones_all();
  return s;
}

double witness_deviation(const BooleanMatrix& m, const SubmatrixSelection& sel) {
  sel.validate();
  long long ones = 0;
  for (int r : sel.row_indices)
    for (int c : sel.col_indices)
      if (m.get(r, c)) ++ones;
  const double expected = m.density() * static_cast<double>(sel.area());
  return std::abs(static_cast<double>(ones) - expected);
}

namespace {

SubmatrixSelection singleton_selection(const BooleanMatrix& m) {
  return SubmatrixSelection::make({0}, {0}, m.rows(), m.cols());
}

DiscrepancyEstimate disc_exact_rows(const BooleanMatrix& m) {
  // Enumerate row subsets in gray-code order; per subset the optimal column
  // set of N = M - pJ is its positive- or negative-sum columns.
  const int rows = m.rows();
  const int cols = m.cols();
  const double p = m.density();

  std::vector<double> col_sum(static_cast<std::size_t>(cols), 0.0);
  std::uint32_t current = 0;
  double best_value = -1.0;
  std::uint32_t best_mask = 0;
  bool best_positive = true;

  const std::uint32_t total = 1u << rows;
  for (std::uint32_t g = 1; g < total; ++g) {
    const std::uint32_t mask = g ^ (g >> 1);
    const std::uint32_t changed = mask ^ current;
    const int r = std::countr_zero(changed);
    const double sign = (mask & changed) ? 1.0 : -1.0;
    for (int c = 0; c < cols; ++c)
      col_sum[static_cast<std::size_t>(c)] += sign * ((m.get(r, c) ? 1.0 : 0.0) - p);
    current = mask;

    double pos = 0.0, neg = 0.0;
    for (int c = 0; c < cols; ++c) {
      const double s = col_sum[static_cast<std::size_t>(c)];
      if (s > 0.0) pos += s;
      if (s < 0.0) neg -= s;
    }
    const double value = std::max(pos, neg);
    if (value > best_value) {
      best_value = value;
      best_mask = mask;
      best_positive = pos >= neg;
    }
  }

  DiscrepancyEstimate out;
  out.exact = true;
  if (best_value <= 0.0) {
    // Constant matrix: any single cell reproduces deviation zero.
    out.value = 0.0;
    out.witness = singleton_selection(m);
    return out;
  }

  std::vector<int> row_idx;
  for (int r = 0; r < rows; ++r)
    if (best_mask & (1u << r)) row_idx.push_back(r);
  std::vector<double> sums(static_cast<std::size_t>(cols), 0.0);
  for (int r : row_idx)
    for (int c = 0; c < cols; ++c)
      sums[static_cast<std::size_t>(c)] += (m.get(r, c) ? 1.0 : 0.0) - p;
  std::vector<int> col_idx;
  for (int c = 0; c < cols; ++c) {
    const double s = sums[static_cast<std::size_t>(c)];
    if (best_positive ? s > 0.0 : s < 0.0) col_idx.push_back(c);
  }
  out.witness = SubmatrixSelection::make(row_idx, col_idx, rows, cols);
  out.value = witness_deviation(m, out.witness);
  return out;
}

}  // namespace

DiscrepancyEstimate disc_exact_small(const BooleanMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw ContractViolation("disc_exact_small: matrix must be nonempty");
  if (std::min(m.rows(), m.cols()) > 16)
    throw ContractViolation(
        "disc_exact_small: min dimension exceeds 16, use disc_lower_rounding");
  if (m.rows() <= m.cols()) return disc_exact_rows(m);
  DiscrepancyEstimate t = disc_exact_rows(m.transposed());
  std::swap(t.witness.row_indices, t.witness.col_indices);
  std::swap(t.witness.parent_rows, t.witness.parent_cols);
  return t;
}

namespace {

struct RoundingOutcome {
  double best_abs = -1.0;
  std::optional<SubmatrixSelection> abs_witness;
  double most_negative = 0.0;  // raw (ones - expected), most negative seen
  std::optional<SubmatrixSelection> negative_witness;
};

// Shared hyperplane rounding. Vectors follow the dual construction for
// N = M - pJ: append one coordinate to each factor row/column and normalize
// so every vector has norm at most one.
RoundingOutcome round_witnesses(const BooleanMatrix& m, const Factorization& f, int trials,
                                std::uint64_t seed) {
  Factorization fb = f;
  rebalance(fb);
  const double gamma = std::max(1.0, fb.product_norm());
  const double p = m.density();
  const int rows = m.rows();
  const int cols = m.cols();
  const int k = fb.inner_dim() + 1;

  // x_i = [u_i, 1] * sqrt(gamma + p^2) / (1 + gamma), y_j = [v_j, -p] / sqrt(gamma + p^2).
  const double xscale = std::sqrt(gamma + p * p) / (1.0 + gamma);
  const double yscale = 1.0 / std::sqrt(gamma + p * p);
  RealMatrix x(rows, k), y(cols, k);
  for (int r = 0; r < rows; ++r) {
    for (int d = 0; d + 1 < k; ++d) x(r, d) = fb.left(r, d) * xscale;
    x(r, k - 1) = xscale;
  }
  for (int c = 0; c < cols; ++c) {
    for (int d = 0; d + 1 < k; ++d) y(c, d) = fb.right(d, c) * yscale;
    y(c, k - 1) = -p * yscale;
  }

  RoundingOutcome out;
  auto consider = [&](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) return;
    long long ones = 0;
    for (int r : a)
      for (int c : b)
        if (m.get(r, c)) ++ones;
    const double raw = static_cast<double>(ones) -
                       p * static_cast<double>(a.size()) * static_cast<double>(b.size());
    if (std::abs(raw) > out.best_abs) {
      out.best_abs = std::abs(raw);
      out.abs_witness = SubmatrixSelection::make(a, b, rows, cols);
    }
    if (raw < out.most_negative) {
      out.most_negative = raw;
      out.negative_witness = SubmatrixSelection::make(a, b, rows, cols);
    }
  };

  CounterRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    CounterRng sub = rng.derive(static_cast<std::uint64_t>(t));
    const std::vector<double> dir = sub.normal_vector(k);
    std::vector<int> a_pos, a_neg, b_pos, b_neg;
    for (int r = 0; r < rows; ++r) {
      double dot = 0.0;
      for (int d = 0; d < k; ++d) dot += x(r, d) * dir[static_cast<std::size_t>(d)];
      (dot >= 0.0 ? a_pos : a_neg).push_back(r);
    }
    for (int c = 0; c < cols; ++c) {
      double dot = 0.0;
      for (int d = 0; d < k; ++d) dot += y(c, d) * dir[static_cast<std::size_t>(d)];
      (dot >= 0.0 ? b_pos : b_neg).push_back(c);
    }
    consider(a_pos, b_pos);
    consider(a_pos, b_neg);
    consider(a_neg, b_pos);
    consider(a_neg, b_neg);
  }
  return out;
}

}  // namespace

DiscrepancyEstimate disc_lower_rounding(const BooleanMatrix& m, const Factorization& f,
                                        int trials, std::uint64_t seed) {
  if (m.rows() == 0 || m.cols() == 0)
    throw ContractViolation("disc_lower_rounding: matrix must be nonempty");
  if (f.left.rows() != m.rows() || f.right.cols() != m.cols() || f.reconstruction_error > 1e-6)
    throw ContractViolation("disc_lower_rounding: factorization does not certify M");
  RoundingOutcome rounds = round_witnesses(m, f, trials, seed);
  DiscrepancyEstimate out;
  out.exact = false;
  if (rounds.abs_witness) {
    out.witness = *rounds.abs_witness;
    out.value = rounds.best_abs;
  } else {
    out.witness = singleton_selection(m);
    out.value = witness_deviation(m, out.witness);
  }
  return out;
}

namespace {

// k indices with the smallest key, ties by index; keys are integers.
std::vector<int> smallest_k(const std::vector<int>& keys, int k) {
  std::vector<int> idx(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) idx[i] = static_cast<int>(i);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
  });
  idx.resize(static_cast<std::size_t>(k));
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<int> counts_within(const BooleanMatrix& m, const std::vector<int>& rows, bool per_col) {
  if (per_col) {
    std::vector<int> counts(static_cast<std::size_t>(m.cols()), 0);
    for (int r : rows)
      for (int c = 0; c < m.cols(); ++c)
        if (m.get(r, c)) ++counts[static_cast<std::size_t>(c)];
    return counts;
  }
  std::vector<int> counts(static_cast<std::size_t>(m.rows()), 0);
  for (int r = 0; r < m.rows(); ++r)
    for (int c : rows)
      if (m.get(r, c)) ++counts[static_cast<std::size_t>(r)];
  return counts;
}

// Resize an index set to exactly k entries ranked by the given counts:
// members stay preferentially, outsiders fill by smallest count.
std::vector<int> resize_by_counts(const std::vector<int>& members, const std::vector<int>& counts,
                                  int k) {
  std::vector<bool> in(counts.size(), false);
  for (int v : members) in[static_cast<std::size_t>(v)] = true;
  std::vector<int> ranked(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) ranked[i] = static_cast<int>(i);
  std::stable_sort(ranked.begin(), ranked.end(), [&](int a, int b) {
    if (in[static_cast<std::size_t>(a)] != in[static_cast<std::size_t>(b)])
      return static_cast<bool>(in[static_cast<std::size_t>(a)]);
    return counts[static_cast<std::size_t>(a)] < counts[static_cast<std::size_t>(b)];
  });
  ranked.resize(static_cast<std::size_t>(k));
  std::sort(ranked.begin(), ranked.end());
  return ranked;
}

long long selection_ones(const BooleanMatrix& m, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  long long ones = 0;
  for (int r : rows)
    for (int c : cols)
      if (m.get(r, c)) ++ones;
  return ones;
}

}  // namespace

SubmatrixSelection half_density_submatrix(const BooleanMatrix& m) {
  if (m.rows() < 2 || m.cols() < 2)
    throw ContractViolation("half_density_submatrix: needs at least two rows and columns");
  const int h = (m.rows() + 1) / 2;
  const int w = (m.cols() + 1) / 2;

  std::vector<std::pair<std::vector<int>, std::vector<int>>> candidates;

  // (a) smallest-row-sum half, then smallest column sums within it
  {
    std::vector<int> rows = smallest_k(m.row_ones_all(), h);
    std::vector<int> cols = smallest_k(counts_within(m, rows, true), w);
    candidates.emplace_back(std::move(rows), std::move(cols));
  }
  // (b) the reverse order
  {
    std::vector<int> cols = smallest_k(m.col_ones_all(), w);
    std::vector<int> rows = smallest_k(counts_within(m, cols, false), h);
    candidates.emplace_back(std::move(rows), std::move(cols));
  }
  // (c) most-negative rounding witness resized by marginal sums
  if (!m.all_zero()) {
    const Factorization f = graphs::degeneracy_split_factorization(m);
    RoundingOutcome rounds = round_witnesses(m, f, 32, 0x5eed);
    if (rounds.negative_witness) {
      const SubmatrixSelection& wsel = *rounds.negative_witness;
      std::vector<int> cols =
          resize_by_counts(wsel.col_indices, counts_within(m, wsel.row_indices, true), w);
      std::vector<int> rows =
          resize_by_counts(wsel.row_indices, counts_within(m, cols, false), h);
      candidates.emplace_back(std::move(rows), std::move(cols));
    }
  }

  std::size_t best = 0;
  long long best_ones = selection_ones(m, candidates[0].first, candidates[0].second);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const long long ones = selection_ones(m, candidates[i].first, candidates[i].second);
    if (ones < best_ones) {
      best_ones = ones;
      best = i;
    }
  }
  return SubmatrixSelection::make(candidates[best].first, candidates[best].second, m.rows(),
                                  m.cols());
}

SparsifyResult sparsify(const BooleanMatrix& m, double delta, double gamma_hint) {
  if (!(delta > 0.0 && delta < 0.5))
    throw ContractViolation("sparsify: delta must lie in (0, 1/2)");
  if (m.rows() == 0 || m.cols() == 0) throw ContractViolation("sparsify: matrix must be nonempty");
  const double epsilon = 1.0 - m.density();
  if (epsilon <= 0.0) throw ContractViolation("sparsify: density must be below 1");

  double gamma = gamma_hint;
  if (gamma <= 0.0)
    gamma = m.all_zero() ? 1.0 : graphs::gamma2_upper_from_degeneracy(m).bound;
  gamma = std::max(gamma, 1.0);

  constexpr double kGuardFactor = 8.0;
  const int max_halvings =
      static_cast<int>(std::ceil(kGuardFactor * gamma / (epsilon * epsilon) * std::log(1.0 / delta)));

  SparsifyResult out;
  out.epsilon = epsilon;
  out.selection = SubmatrixSelection::full(m.rows(), m.cols());
  SubmatrixSelection best = out.selection;
  double best_density = m.density();
  BooleanMatrix cur = m;

  while (cur.density() > delta / 4.0) {
    if (out.halvings >= max_halvings)
      throw PartialResult("sparsify: density target not reached within the iteration guard", best);
    if (cur.rows() < 2 || cur.cols() < 2)
      throw PartialResult("sparsify: matrix too small to halve further", best);
    const SubmatrixSelection half = half_density_submatrix(cur);
    out.selection = out.selection.compose(half);
    cur = half.extract(cur);
    ++out.halvings;
    if (cur.density() < best_density) {
      best_density = cur.density();
      best = out.selection;
    }
  }

  // Prune heavy rows/columns against the pre-pruning dimensions.
  const int mi = cur.rows();
  const int ni = cur.cols();
  std::vector<int> rows_kept, cols_kept;
  for (int r = 0; r < mi; ++r)
    if (static_cast<double>(cur.row_ones(r)) <= delta * ni / 2.0) rows_kept.push_back(r);
  for (int c = 0; c < ni; ++c)
    if (static_cast<double>(cur.col_ones(c)) <= delta * mi / 2.0) cols_kept.push_back(c);
  if (rows_kept.empty() || cols_kept.empty())
    throw PartialResult("sparsify: pruning removed an entire side", best);
  out.selection =
      out.selection.compose(SubmatrixSelection::make(rows_kept, cols_kept, mi, ni));

  // The delta-fraction bounds must hold exactly on the output.
  BooleanMatrix pruned = out.selection.extract(m);
  for (int r = 0; r < pruned.rows(); ++r)
    if (static_cast<double>(pruned.row_ones(r)) > delta * pruned.cols())
      throw NumericalError("sparsify: row bound violated after pruning");
  for (int c = 0; c < pruned.cols(); ++c)
    if (static_cast<double>(pruned.col_ones(c)) > delta * pruned.rows())
      throw NumericalError("sparsify: column bound violated after pruning");
  return out;
}

}  // namespace matcut::disc
