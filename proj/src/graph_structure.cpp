#include "matcut/graph_structure.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "matcut/errors.hpp"
#include "matcut/linalg.hpp"
#include "matcut/rectangle.hpp"

namespace matcut::graphs {

namespace {

// Vertex ids: rows are 0..m-1, columns m..m+n-1.
int vertex_count(const BooleanMatrix& m) { return m.rows() + m.cols(); }

std::vector<int> vertex_degrees(const BooleanMatrix& m) {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count(m)));
  for (int r = 0; r < m.rows(); ++r) deg[static_cast<std::size_t>(r)] = m.row_ones(r);
  for (int c = 0; c < m.cols(); ++c) deg[static_cast<std::size_t>(m.rows() + c)] = m.col_ones(c);
  return deg;
}

}  // namespace

DegeneracyReport degeneracy_order(const BooleanMatrix& m) {
  const int rows = m.rows();
  const int total = vertex_count(m);
  std::vector<int> deg = vertex_degrees(m);
  std::vector<bool> removed(static_cast<std::size_t>(total), false);

  // Lazy min-heap of (degree, id); stale entries are skipped on pop. The id
  // ordering makes ties deterministic: rows carry smaller ids than columns.
  using Entry = std::pair<int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (int v = 0; v < total; ++v) heap.emplace(deg[static_cast<std::size_t>(v)], v);

  DegeneracyReport report;
  report.elimination_order.reserve(static_cast<std::size_t>(total));
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (removed[static_cast<std::size_t>(v)] || d != deg[static_cast<std::size_t>(v)]) continue;
    removed[static_cast<std::size_t>(v)] = true;
    report.degeneracy = std::max(report.degeneracy, d);
    PeelStep step;
    step.is_column = v >= rows;
    step.index = step.is_column ? v - rows : v;
    step.degree_at_removal = d;
    report.elimination_order.push_back(step);
    if (step.is_column) {
      const int c = step.index;
      for (int r = 0; r < rows; ++r)
        if (m.get(r, c) && !removed[static_cast<std::size_t>(r)]) {
          heap.emplace(--deg[static_cast<std::size_t>(r)], r);
        }
    } else {
      const int r = step.index;
      for (int c = 0; c < m.cols(); ++c)
        if (m.get(r, c) && !removed[static_cast<std::size_t>(rows + c)]) {
          heap.emplace(--deg[static_cast<std::size_t>(rows + c)], rows + c);
        }
    }
  }
  return report;
}

DegeneracyReport degeneracy_order(const BipartiteGraph& g) { return degeneracy_order(g.adjacency); }

std::optional<C4Violation> find_c4(const BooleanMatrix& m) {
  for (int r1 = 0; r1 < m.rows(); ++r1) {
    if (m.row_ones(r1) < 2) continue;
    for (int r2 = r1 + 1; r2 < m.rows(); ++r2) {
      if (m.row_ones(r2) < 2) continue;
      if (m.row_intersection_ones(r1, r2) < 2) continue;
      C4Violation v;
      v.row1 = r1;
      v.row2 = r2;
      int found = 0;
      for (int c = 0; c < m.cols() && found < 2; ++c)
        if (m.get(r1, c) && m.get(r2, c)) (found++ == 0 ? v.col1 : v.col2) = c;
      return v;
    }
  }
  return std::nullopt;
}

DegeneracySplit gamma2_upper_from_degeneracy(const BooleanMatrix& m) {
  const DegeneracyReport report = degeneracy_order(m);
  const int rows = m.rows();
  std::vector<int> pos(static_cast<std::size_t>(vertex_count(m)), 0);
  for (std::size_t i = 0; i < report.elimination_order.size(); ++i) {
    const PeelStep& s = report.elimination_order[i];
    pos[static_cast<std::size_t>(s.is_column ? rows + s.index : s.index)] = static_cast<int>(i);
  }

  DegeneracySplit split;
  split.m1 = BooleanMatrix(m.rows(), m.cols());
  split.m2 = BooleanMatrix(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      if (!m.get(r, c)) continue;
      // The vertex peeled first has at most `degeneracy` neighbours left.
      if (pos[static_cast<std::size_t>(r)] < pos[static_cast<std::size_t>(rows + c)])
        split.m1.set(r, c, true);
      else
        split.m2.set(r, c, true);
    }

  int max_row = 0, max_col = 0;
  for (int r = 0; r < m.rows(); ++r) max_row = std::max(max_row, split.m1.row_ones(r));
  for (int c = 0; c < m.cols(); ++c) max_col = std::max(max_col, split.m2.col_ones(c));
  split.bound = std::sqrt(static_cast<double>(max_row)) + std::sqrt(static_cast<double>(max_col));
  split.part_rows = make_factorization(split.m1.to_real(), RealMatrix::identity(m.cols()), split.m1);
  split.part_cols = make_factorization(RealMatrix::identity(m.rows()), split.m2.to_real(), split.m2);
  return split;
}

Factorization degeneracy_split_factorization(const BooleanMatrix& m) {
  if (m.all_zero()) throw ContractViolation("degeneracy split: matrix is all zero");
  const DegeneracySplit split = gamma2_upper_from_degeneracy(m);
  return combine_sum(split.part_rows, split.part_cols, m.to_real());
}

namespace {

struct PeelState {
  std::vector<int> row_idx;
  std::vector<int> col_idx;
  long long edges = 0;
};

// Min-degree peeling over an induced submatrix, returning the suffix with the
// maximum average degree (2e / vertices). Earliest maximizer wins, so the
// result is the largest such subgraph.
PeelState peel_to_densest(const BooleanMatrix& m, const std::vector<int>& rows_in,
                          const std::vector<int>& cols_in) {
  const int rn = static_cast<int>(rows_in.size());
  const int cn = static_cast<int>(cols_in.size());
  const int total = rn + cn;
  std::vector<int> deg(static_cast<std::size_t>(total), 0);
  long long edges = 0;
  for (int i = 0; i < rn; ++i)
    for (int j = 0; j < cn; ++j)
      if (m.get(rows_in[static_cast<std::size_t>(i)], cols_in[static_cast<std::size_t>(j)])) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(rn + j)];
        ++edges;
      }

  std::vector<bool> removed(static_cast<std::size_t>(total), false);
  using Entry = std::pair<int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (int v = 0; v < total; ++v) heap.emplace(deg[static_cast<std::size_t>(v)], v);

  std::vector<int> removal_seq;
  removal_seq.reserve(static_cast<std::size_t>(total));
  long long best_e = edges;
  long long best_v = total;
  std::size_t best_prefix = 0;  // number of removals before the best state
  long long cur_e = edges;
  long long cur_v = total;
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (removed[static_cast<std::size_t>(v)] || d != deg[static_cast<std::size_t>(v)]) continue;
    removed[static_cast<std::size_t>(v)] = true;
    removal_seq.push_back(v);
    cur_e -= d;
    cur_v -= 1;
    if (v < rn) {
      for (int j = 0; j < cn; ++j)
        if (m.get(rows_in[static_cast<std::size_t>(v)], cols_in[static_cast<std::size_t>(j)]) &&
            !removed[static_cast<std::size_t>(rn + j)])
          heap.emplace(--deg[static_cast<std::size_t>(rn + j)], rn + j);
    } else {
      const int j = v - rn;
      for (int i = 0; i < rn; ++i)
        if (m.get(rows_in[static_cast<std::size_t>(i)], cols_in[static_cast<std::size_t>(j)]) &&
            !removed[static_cast<std::size_t>(i)])
          heap.emplace(--deg[static_cast<std::size_t>(i)], i);
    }
    // Compare 2e/v as rationals: cur_e * best_v > best_e * cur_v.
    if (cur_v > 0 && cur_e * best_v > best_e * cur_v) {
      best_e = cur_e;
      best_v = cur_v;
      best_prefix = removal_seq.size();
    }
  }

  std::vector<bool> gone(static_cast<std::size_t>(total), false);
  for (std::size_t i = 0; i < best_prefix; ++i) gone[static_cast<std::size_t>(removal_seq[i])] = true;
  PeelState out;
  out.edges = best_e;
  for (int i = 0; i < rn; ++i)
    if (!gone[static_cast<std::size_t>(i)]) out.row_idx.push_back(rows_in[static_cast<std::size_t>(i)]);
  for (int j = 0; j < cn; ++j)
    if (!gone[static_cast<std::size_t>(rn + j)]) out.col_idx.push_back(cols_in[static_cast<std::size_t>(j)]);
  return out;
}

std::vector<int> iota_vector(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

RegularizedSubmatrix regularize_degrees(const BooleanMatrix& m) {
  if (m.all_zero()) throw ContractViolation("regularize_degrees: matrix is all zero");

  PeelState g0 = peel_to_densest(m, iota_vector(m.rows()), iota_vector(m.cols()));
  const long long v0 = static_cast<long long>(g0.row_idx.size()) + static_cast<long long>(g0.col_idx.size());
  const long long e0 = g0.edges;

  // Cap the larger side: drop its vertices of degree above twice the average.
  const bool cap_rows = g0.row_idx.size() >= g0.col_idx.size();
  BooleanMatrix n0 = SubmatrixSelection::make(g0.row_idx, g0.col_idx, m.rows(), m.cols()).extract(m);
  std::vector<int> kept_rows_local, kept_cols_local;
  if (cap_rows) {
    for (int i = 0; i < n0.rows(); ++i)
      if (static_cast<long long>(n0.row_ones(i)) * v0 <= 4 * e0) kept_rows_local.push_back(i);
    kept_cols_local = iota_vector(n0.cols());
  } else {
    kept_rows_local = iota_vector(n0.rows());
    for (int j = 0; j < n0.cols(); ++j)
      if (static_cast<long long>(n0.col_ones(j)) * v0 <= 4 * e0) kept_cols_local.push_back(j);
  }
  if (kept_rows_local.empty() || kept_cols_local.empty())
    throw PartialResult("regularize_degrees: cap removed an entire side",
                        SubmatrixSelection::make(g0.row_idx, g0.col_idx, m.rows(), m.cols()));

  PeelState g2 = peel_to_densest(n0, kept_rows_local, kept_cols_local);
  // Map local indices back into m.
  std::vector<int> rows_final, cols_final;
  for (int i : g2.row_idx) rows_final.push_back(g0.row_idx[static_cast<std::size_t>(i)]);
  for (int j : g2.col_idx) cols_final.push_back(g0.col_idx[static_cast<std::size_t>(j)]);

  RegularizedSubmatrix out;
  out.selection = SubmatrixSelection::make(rows_final, cols_final, m.rows(), m.cols());
  out.cap_on_rows = cap_rows;
  out.edge_count = g2.edges;
  const long long v2 = static_cast<long long>(g2.row_idx.size()) + static_cast<long long>(g2.col_idx.size());
  out.average_degree = 2.0 * static_cast<double>(g2.edges) / static_cast<double>(v2);

  // Exact rational verification of the advertised conditions.
  BooleanMatrix nf = out.selection.extract(m);
  long long min_deg = nf.rows() + nf.cols();
  for (int i = 0; i < nf.rows(); ++i) min_deg = std::min<long long>(min_deg, nf.row_ones(i));
  for (int j = 0; j < nf.cols(); ++j) min_deg = std::min<long long>(min_deg, nf.col_ones(j));
  long long cap_max = 0;
  if (cap_rows)
    for (int i = 0; i < nf.rows(); ++i) cap_max = std::max<long long>(cap_max, nf.row_ones(i));
  else
    for (int j = 0; j < nf.cols(); ++j) cap_max = std::max<long long>(cap_max, nf.col_ones(j));
  const bool min_ok = min_deg * v2 >= g2.edges;            // min degree >= d'/2
  const bool cap_ok = cap_max * v2 <= 12 * g2.edges;       // capped side <= 6 d'
  if (!min_ok || !cap_ok)
    throw PartialResult("regularize_degrees: verification failed", out.selection);
  return out;
}

double c4_lower_certificate(const BooleanMatrix& m) {
  if (m.all_zero()) throw ContractViolation("c4_lower_certificate: matrix is all zero");
  if (auto v = find_c4(m))
    throw ContractViolation("c4_lower_certificate: matrix is not four-cycle-free (rows " +
                            std::to_string(v->row1) + "," + std::to_string(v->row2) + " cols " +
                            std::to_string(v->col1) + "," + std::to_string(v->col2) + ")");

  const RegularizedSubmatrix reg = regularize_degrees(m);
  BooleanMatrix n = reg.selection.extract(m);
  // The degree-weighted vector goes on the uncapped side; transpose so the
  // cap sits on columns.
  if (reg.cap_on_rows) n = n.transposed();

  const double f = static_cast<double>(n.ones());
  RealMatrix a(n.rows(), n.cols());
  const double vcol = 1.0 / std::sqrt(static_cast<double>(n.cols()));
  for (int r = 0; r < n.rows(); ++r) {
    const double ur = std::sqrt(static_cast<double>(n.row_ones(r)) / f);
    for (int c = 0; c < n.cols(); ++c)
      if (n.get(r, c)) a(r, c) = ur * vcol;
  }
  return linalg::trace_norm(a);
}

ZarankiewiczResult zarankiewicz_allones(const BooleanMatrix& m, double gamma_hint, int t,
                                        const Budget& budget) {
  (void)t;
  (void)gamma_hint;
  if (m.all_zero())
    throw ContractViolation("zarankiewicz_allones: matrix has no one entries");

  PeelState core = peel_to_densest(m, iota_vector(m.rows()), iota_vector(m.cols()));
  SubmatrixSelection core_sel = SubmatrixSelection::make(core.row_idx, core.col_idx, m.rows(), m.cols());
  BooleanMatrix core_m = core_sel.extract(m);

  ZarankiewiczResult out;
  out.core_rows = core_m.rows();
  out.core_cols = core_m.cols();
  out.core_edges = core.edges;

  SubmatrixSelection best = rect::greedy_ones_rectangle(m);
  try {
    rect::ZeroRectangleResult found = rect::find_allones_rectangle(core_m, budget);
    SubmatrixSelection mapped = core_sel.compose(found.selection);
    if (mapped.min_side() > best.min_side() ||
        (mapped.min_side() == best.min_side() && mapped.area() > best.area()))
      best = mapped;
  } catch (const PartialResult&) {
    // keep the greedy fallback
  }

  // Recount: the returned block must be genuinely all ones.
  BooleanMatrix check = best.extract(m);
  if (!check.is_all_ones())
    throw NumericalError("zarankiewicz_allones: recount failed");
  out.selection = best;
  return out;
}

std::vector<int> turan_clique(const BooleanMatrix& adjacency) {
  require_simple_adjacency(adjacency);
  const int n = adjacency.rows();
  if (n == 0) return {};
  std::vector<int> candidates = iota_vector(n);
  std::vector<int> clique;
  while (!candidates.empty()) {
    // Minimum complement-degree within the candidate set = maximum degree.
    int best = candidates.front();
    int best_deg = -1;
    for (int v : candidates) {
      int deg = 0;
      for (int u : candidates)
        if (u != v && adjacency.get(v, u)) ++deg;
      if (deg > best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    clique.push_back(best);
    std::vector<int> next;
    for (int u : candidates)
      if (u != best && adjacency.get(best, u)) next.push_back(u);
    candidates = std::move(next);
  }
  std::sort(clique.begin(), clique.end());
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!adjacency.get(clique[i], clique[j]))
        throw NumericalError("turan_clique: output is not a clique");
  return clique;
}

double tripartite_min_eigenvalue(const std::vector<int>& a, const std::vector<int>& b,
                                 const std::vector<int>& c, const BooleanMatrix& adjacency) {
  require_simple_adjacency(adjacency);
  const std::size_t k = a.size();
  if (b.size() != k || c.size() != k || k == 0)
    throw ContractViolation("tripartite_min_eigenvalue: classes must be equal-sized and nonempty");
  for (int u : a)
    for (int v : b)
      if (adjacency.get(u, v))
        throw ContractViolation("tripartite_min_eigenvalue: forbidden A-B edge (" +
                                std::to_string(u) + "," + std::to_string(v) + ")");
  for (int w : c) {
    for (int u : a)
      if (!adjacency.get(u, w))
        throw ContractViolation("tripartite_min_eigenvalue: missing A-C edge (" +
                                std::to_string(u) + "," + std::to_string(w) + ")");
    for (int v : b)
      if (!adjacency.get(v, w))
        throw ContractViolation("tripartite_min_eigenvalue: missing B-C edge (" +
                                std::to_string(v) + "," + std::to_string(w) + ")");
  }

  std::vector<int> verts;
  verts.insert(verts.end(), a.begin(), a.end());
  verts.insert(verts.end(), b.begin(), b.end());
  verts.insert(verts.end(), c.begin(), c.end());
  RealMatrix h(static_cast<int>(verts.size()), static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (i != j && adjacency.get(verts[i], verts[j])) h(static_cast<int>(i), static_cast<int>(j)) = 1.0;

  const linalg::SpectralData spec = linalg::sym_eigen(h);
  const double lambda_min = spec.eigenvalues.back();
  if (lambda_min > -static_cast<double>(k) / 3.0 + 1e-8)
    throw NumericalError("tripartite_min_eigenvalue: smallest eigenvalue above -k/3");
  return lambda_min;
}

namespace {

BooleanMatrix graph_complement(const BooleanMatrix& adjacency) {
  const int n = adjacency.rows();
  BooleanMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !adjacency.get(i, j)) out.set(i, j, true);
  return out;
}

BooleanMatrix induced_adjacency(const BooleanMatrix& adjacency, const std::vector<int>& verts) {
  BooleanMatrix out(static_cast<int>(verts.size()), static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (i != j && adjacency.get(verts[i], verts[j]))
        out.set(static_cast<int>(i), static_cast<int>(j), true);
  return out;
}

}  // namespace

CliqueResult smallest_eigenvalue_clique(const BooleanMatrix& adjacency, double lambda,
                                        const Budget& budget) {
  require_simple_adjacency(adjacency);
  if (lambda <= 0.0) throw ContractViolation("smallest_eigenvalue_clique: lambda must be positive");
  const linalg::SpectralData spec = linalg::sym_eigen(adjacency.to_real());
  if (!spec.eigenvalues.empty() && spec.eigenvalues.back() < -lambda - 1e-8)
    throw ContractViolation("smallest_eigenvalue_clique: smallest eigenvalue below -lambda");

  CliqueResult out;
  out.independence_cap = static_cast<int>(std::ceil(3.0 * lambda + 1.0));

  std::vector<int> best = turan_clique(adjacency);
  if (!adjacency.all_zero()) {
    ZarankiewiczResult z1 = zarankiewicz_allones(adjacency, 2.0 * lambda,
                                                 std::max(1, adjacency.rows() / 4), budget);
    out.biclique_side = z1.selection.min_side();
    const std::vector<int>& x = z1.selection.row_indices;
    BooleanMatrix gx = induced_adjacency(adjacency, x);
    BooleanMatrix gx_comp = graph_complement(gx);
    if (!gx_comp.all_zero()) {
      ZarankiewiczResult z2 =
          zarankiewicz_allones(gx_comp, 2.0 * lambda + 2.0, out.independence_cap, budget);
      out.complement_biclique_side = z2.selection.min_side();
    }
    std::vector<int> inner = turan_clique(gx);
    std::vector<int> mapped;
    for (int i : inner) mapped.push_back(x[static_cast<std::size_t>(i)]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped.size() > best.size()) best = std::move(mapped);
  }
  out.clique = std::move(best);
  return out;
}

void require_simple_adjacency(const BooleanMatrix& adjacency) {
  if (adjacency.rows() != adjacency.cols())
    throw ContractViolation("adjacency matrix must be square");
  for (int i = 0; i < adjacency.rows(); ++i) {
    if (adjacency.get(i, i)) throw ContractViolation("adjacency matrix must have a zero diagonal");
    for (int j = i + 1; j < adjacency.cols(); ++j)
      if (adjacency.get(i, j) != adjacency.get(j, i))
        throw ContractViolation("adjacency matrix must be symmetric");
  }
}

long long count_edges(const BooleanMatrix& adjacency) { return adjacency.ones() / 2; }

}  // namespace matcut::graphs
