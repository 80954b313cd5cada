#include "matcut/maxcut.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "matcut/errors.hpp"
#include "matcut/graph_structure.hpp"
#include "matcut/linalg.hpp"
#include "matcut/rectangle.hpp"
#include "matcut/rng.hpp"

namespace matcut::mc {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges, bool* had_duplicates) {
  if (n < 0) throw ContractViolation("graph: vertex count must be nonnegative");
  for (auto& [a, b] : edges) {
    if (a == b) throw ContractViolation("graph: self-loops are not allowed");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ContractViolation("graph: edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  const std::size_t before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (had_duplicates) *had_duplicates = edges.size() != before;

  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adjacency = BooleanMatrix(n, n);
  for (const auto& [a, b] : g.edges) {
    g.adjacency.set(a, b, true);
    g.adjacency.set(b, a, true);
  }
  return g;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    pos[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> sub_edges;
  for (const auto& [a, b] : edges) {
    const int pa = pos[static_cast<std::size_t>(a)];
    const int pb = pos[static_cast<std::size_t>(b)];
    if (pa >= 0 && pb >= 0) sub_edges.emplace_back(pa, pb);
  }
  return from_edges(static_cast<int>(vertices.size()), std::move(sub_edges));
}

std::vector<int> Graph::vertices_with_edges() const {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& [a, b] : edges) {
    seen[static_cast<std::size_t>(a)] = true;
    seen[static_cast<std::size_t>(b)] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

namespace {

long long count_cut(const Graph& g, const std::vector<std::uint8_t>& partition) {
  long long cut = 0;
  for (const auto& [a, b] : g.edges)
    if (partition[static_cast<std::size_t>(a)] != partition[static_cast<std::size_t>(b)]) ++cut;
  return cut;
}

CutReport make_report(const Graph& g, std::vector<std::uint8_t> partition, std::string method,
                      int trials) {
  CutReport r;
  r.partition = std::move(partition);
  r.cut_size = count_cut(g, r.partition);
  r.surplus = static_cast<double>(r.cut_size) - static_cast<double>(g.m()) / 2.0;
  r.method = std::move(method);
  r.trials_used = trials;
  return r;
}

}  // namespace

void verify_cut(const Graph& g, const CutReport& report) {
  if (static_cast<int>(report.partition.size()) != g.n)
    throw ContractViolation("verify_cut: partition size does not match");
  if (count_cut(g, report.partition) != report.cut_size)
    throw NumericalError("verify_cut: crossing-edge recount disagrees with cut_size");
  const double expected = static_cast<double>(report.cut_size) - static_cast<double>(g.m()) / 2.0;
  if (report.surplus != expected)
    throw NumericalError("verify_cut: surplus is not cut_size - m/2");
}

double graph_energy(const Graph& g) {
  if (g.n == 0) return 0.0;
  const linalg::SpectralData spec = linalg::sym_eigen(g.adjacency.to_real());
  double e = 0.0;
  for (double v : spec.eigenvalues) e += std::abs(v);
  return e;
}

double edwards_bound(long long m) {
  if (m < 0) throw ContractViolation("edwards_bound: edge count must be nonnegative");
  return static_cast<double>(m) / 2.0 +
         (std::sqrt(8.0 * static_cast<double>(m) + 1.0) - 1.0) / 8.0;
}

CutReport maxcut_exact(const Graph& g) {
  if (g.n > 24)
    throw ContractViolation("maxcut_exact: n > 24, use maxcut_local_search");
  if (g.n == 0) return make_report(g, {}, "exact", 0);

  // Adjacency as per-vertex bitmasks; vertex 0 stays on side X.
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n), 0);
  for (const auto& [a, b] : g.edges) {
    adj[static_cast<std::size_t>(a)] |= 1u << b;
    adj[static_cast<std::size_t>(b)] |= 1u << a;
  }

  std::uint32_t side = 0;  // bit set = side Y
  long long cut = 0;
  long long best_cut = 0;
  std::uint32_t best_side = 0;
  const int free_vertices = g.n - 1;
  const std::uint32_t total = 1u << free_vertices;
  std::uint32_t gray = 0;
  for (std::uint32_t i = 1; i < total; ++i) {
    const std::uint32_t next_gray = i ^ (i >> 1);
    const int v = std::countr_zero(gray ^ next_gray) + 1;  // flipped vertex
    gray = next_gray;
    const std::uint32_t bit = 1u << v;
    const bool to_y = next_gray & (1u << (v - 1));
    // Crossing edges gained: neighbours on the side v leaves minus the ones
    // on the side it joins. No self-loops, so v's own bit never counts.
    const int on_y = std::popcount(adj[static_cast<std::size_t>(v)] & side);
    const int on_x = std::popcount(adj[static_cast<std::size_t>(v)] & ~side);
    if (to_y) {
      cut += on_x - on_y;
      side |= bit;
    } else {
      cut += on_y - on_x;
      side &= ~bit;
    }
    if (cut > best_cut) {
      best_cut = cut;
      best_side = side;
    }
  }

  std::vector<std::uint8_t> partition(static_cast<std::size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v)
    if (best_side & (1u << v)) partition[static_cast<std::size_t>(v)] = 1;
  CutReport r = make_report(g, std::move(partition), "exact", 0);
  if (r.cut_size != best_cut)
    throw NumericalError("maxcut_exact: incremental count disagrees with recount");
  return r;
}

CutReport maxcut_local_search(const Graph& g, int restarts, std::uint64_t seed) {
  if (g.n == 0) return make_report(g, {}, "local", 0);
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(g.n));
  for (const auto& [a, b] : g.edges) {
    neighbours[static_cast<std::size_t>(a)].push_back(b);
    neighbours[static_cast<std::size_t>(b)].push_back(a);
  }

  CounterRng rng(seed);
  CutReport best;
  best.cut_size = -1;
  for (int t = 0; t < std::max(1, restarts); ++t) {
    CounterRng sub = rng.derive(static_cast<std::uint64_t>(t));
    std::vector<std::uint8_t> part(static_cast<std::size_t>(g.n));
    for (auto& p : part) p = sub.next() & 1u;

    // gain(v) = (same-side neighbours) - (cross neighbours); flip best gain.
    bool improved = true;
    while (improved) {
      improved = false;
      int best_v = -1;
      long long best_gain = 0;
      for (int v = 0; v < g.n; ++v) {
        long long gain = 0;
        for (int u : neighbours[static_cast<std::size_t>(v)])
          gain += (part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)]) ? 1 : -1;
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
        }
      }
      if (best_v >= 0) {
        part[static_cast<std::size_t>(best_v)] ^= 1u;
        improved = true;
      }
    }
    CutReport r = make_report(g, std::move(part), "local", t + 1);
    if (r.cut_size > best.cut_size) best = std::move(r);
  }
  best.trials_used = std::max(1, restarts);
  return best;
}

RoundingEmbedding spectral_embedding(const Graph& g) {
  if (g.m() == 0) throw ContractViolation("spectral_embedding: graph must have at least one edge");
  for (int v = 0; v < g.n; ++v)
    if (g.adjacency.row_ones(v) == 0)
      throw ContractViolation("spectral_embedding: isolated vertices must be removed by the caller");

  const int n = g.n;
  const linalg::SpectralData spec = linalg::sym_eigen(g.adjacency.to_real());

  RealMatrix m(n, n);
  double negative_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lambda = spec.eigenvalues[static_cast<std::size_t>(i)];
    if (lambda >= 0.0) continue;
    negative_sum += lambda;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m(r, c) += spec.eigenvectors(r, i) * spec.eigenvectors(c, i);
  }

  RoundingEmbedding emb;
  emb.negative_eigenvalue_sum = negative_sum;
  emb.m_prime = m;
  for (int i = 0; i < n; ++i) emb.m_prime(i, i) = 1.0;

  // <A, M> must equal -energy/2; the unit diagonal does not change it since
  // the adjacency diagonal is zero.
  const double inner = frobenius_inner(g.adjacency.to_real(), m);
  const double energy = graph_energy(g);
  if (std::abs(inner + energy / 2.0) > 1e-6)
    throw NumericalError("spectral_embedding: <A,M> deviates from -energy/2 by " +
                         std::to_string(std::abs(inner + energy / 2.0)));
  const double frob_sq = emb.m_prime.frobenius_norm() * emb.m_prime.frobenius_norm();
  if (frob_sq > 2.0 * n + 1e-6)
    throw NumericalError("spectral_embedding: ||M'||_F^2 exceeds 2n");

  const linalg::SpectralData mp = linalg::sym_eigen(emb.m_prime);
  if (mp.eigenvalues.back() < -1e-7)
    throw NumericalError("spectral_embedding: M' is not PSD");
  emb.vectors = RealMatrix(n, n);
  for (int c = 0; c < n; ++c) {
    const double root = std::sqrt(std::max(0.0, mp.eigenvalues[static_cast<std::size_t>(c)]));
    for (int r = 0; r < n; ++r) emb.vectors(r, c) = mp.eigenvectors(r, c) * root;
  }
  for (int r = 0; r < n; ++r) {
    const double norm = std::sqrt(emb.vectors.row_norm_squared(r));
    if (std::abs(norm - 1.0) > 1e-6)
      throw NumericalError("spectral_embedding: embedding row norm drifted from 1");
    for (int c = 0; c < n; ++c) emb.vectors(r, c) /= norm;
  }
  return emb;
}

RoundingResult hyperplane_round_surplus(const RoundingEmbedding& emb, const Graph& g, int trials,
                                        std::uint64_t seed) {
  const int n = g.n;
  if (emb.vectors.rows() != n)
    throw ContractViolation("hyperplane_round_surplus: embedding size does not match graph");
  const int k = emb.vectors.cols();

  RoundingResult out;
  for (const auto& [a, b] : g.edges) {
    double dot = 0.0;
    for (int d = 0; d < k; ++d) dot += emb.vectors(a, d) * emb.vectors(b, d);
    dot = std::clamp(dot, -1.0, 1.0);
    out.closed_form_expectation += std::acos(dot) / kPi;
  }

  CounterRng rng(seed);
  long long best_cut = -1;
  std::vector<std::uint8_t> best_part;
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < std::max(1, trials); ++t) {
    CounterRng sub = rng.derive(static_cast<std::uint64_t>(t));
    const std::vector<double> dir = sub.normal_vector(k);
    std::vector<std::uint8_t> part(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      double dot = 0.0;
      for (int d = 0; d < k; ++d) dot += emb.vectors(v, d) * dir[static_cast<std::size_t>(d)];
      // Ties (|dot| below 1e-12) stay on side X.
      if (dot < -1e-12) part[static_cast<std::size_t>(v)] = 1;
    }
    const long long cut = count_cut(g, part);
    sum += static_cast<double>(cut);
    sum_sq += static_cast<double>(cut) * static_cast<double>(cut);
    if (cut > best_cut) {
      best_cut = cut;
      best_part = std::move(part);
    }
  }
  const int used = std::max(1, trials);
  out.mean_cut = sum / used;
  out.sample_std = std::sqrt(std::max(0.0, sum_sq / used - out.mean_cut * out.mean_cut));
  out.best = make_report(g, std::move(best_part), "spectral", used);
  return out;
}

CutReport surplus_compose(const Graph& g, const std::vector<std::vector<int>>& parts,
                          const std::vector<CutReport>& part_cuts) {
  if (parts.size() != part_cuts.size())
    throw ContractViolation("surplus_compose: parts and cuts must align");
  std::vector<int> owner(static_cast<std::size_t>(g.n), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p]) {
      if (v < 0 || v >= g.n) throw ContractViolation("surplus_compose: vertex out of range");
      if (owner[static_cast<std::size_t>(v)] != -1)
        throw ContractViolation("surplus_compose: parts overlap");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Graph sub = g.induced(parts[p]);
    verify_cut(sub, part_cuts[p]);
  }

  std::vector<std::uint8_t> part(static_cast<std::size_t>(g.n), 0);
  std::vector<bool> placed(static_cast<std::size_t>(g.n), false);
  // Orient the parts one at a time, keeping whichever orientation cuts more
  // of the edges to already placed vertices.
  for (std::size_t p = 0; p < parts.size(); ++p) {
    long long keep = 0, flip = 0;
    for (std::size_t i = 0; i < parts[p].size(); ++i) {
      const int v = parts[p][i];
      const std::uint8_t side = part_cuts[p].partition[i];
      for (const auto& [a, b] : g.edges) {
        int u = -1;
        if (a == v) u = b;
        if (b == v) u = a;
        if (u < 0 || !placed[static_cast<std::size_t>(u)]) continue;
        const bool crosses_keep = side != part[static_cast<std::size_t>(u)];
        (crosses_keep ? keep : flip) += 1;
      }
    }
    const bool do_flip = flip > keep;
    for (std::size_t i = 0; i < parts[p].size(); ++i) {
      const int v = parts[p][i];
      part[static_cast<std::size_t>(v)] =
          part_cuts[p].partition[i] ^ static_cast<std::uint8_t>(do_flip ? 1 : 0);
      placed[static_cast<std::size_t>(v)] = true;
    }
  }
  // Leftover vertices go to the side that cuts more of their placed edges.
  for (int v = 0; v < g.n; ++v) {
    if (placed[static_cast<std::size_t>(v)]) continue;
    long long to_x = 0, to_y = 0;
    for (const auto& [a, b] : g.edges) {
      int u = -1;
      if (a == v) u = b;
      if (b == v) u = a;
      if (u < 0 || !placed[static_cast<std::size_t>(u)]) continue;
      (part[static_cast<std::size_t>(u)] == 1 ? to_x : to_y) += 1;
    }
    part[static_cast<std::size_t>(v)] = to_x >= to_y ? 0 : 1;
    placed[static_cast<std::size_t>(v)] = true;
  }

  CutReport out = make_report(g, std::move(part), "compose", 0);
  // Exact half-integer comparison via doubled surpluses.
  long long doubled = 2 * out.cut_size - g.m();
  long long doubled_parts = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Graph sub = g.induced(parts[p]);
    doubled_parts += 2 * part_cuts[p].cut_size - sub.m();
  }
  if (doubled < doubled_parts)
    throw NumericalError("surplus_compose: composed surplus below the part sum");
  return out;
}

InverseMaxcutReport inverse_maxcut_clique(const Graph& g, const Budget& budget,
                                          std::uint64_t seed) {
  if (g.m() == 0) throw ContractViolation("inverse_maxcut_clique: graph must have an edge");

  const std::vector<int> active = g.vertices_with_edges();
  const Graph h = g.induced(active);

  InverseMaxcutReport report;
  CutReport cut = h.n <= 24 ? maxcut_exact(h)
                            : maxcut_local_search(h, budget.local_restarts, seed);
  report.maxcut_method = cut.method;
  const double sqrt_m = std::sqrt(static_cast<double>(h.m()));
  report.alpha_hat = cut.surplus / sqrt_m;
  report.energy = graph_energy(h);
  report.energy_surplus_ratio = cut.surplus > 0.0 ? report.energy / cut.surplus : 0.0;

  const double raw_eps = report.alpha_hat > 0.0
                             ? 1.0 / (72.0 * report.alpha_hat * report.alpha_hat)
                             : 1.0;
  report.epsilon = std::min(raw_eps, 0.5);
  report.epsilon_clamped = raw_eps > 0.5;

  // Direct greedy clique backs the pipeline.
  std::vector<int> best = graphs::turan_clique(h.adjacency);

  try {
    rect::TraceToGammaResult trimmed =
        rect::trace_to_gamma_submatrix(h.adjacency.to_real(), report.epsilon);
    // Symmetrize the kept set so it stays a vertex subset.
    std::vector<int> kept;
    std::set_intersection(trimmed.selection.row_indices.begin(),
                          trimmed.selection.row_indices.end(),
                          trimmed.selection.col_indices.begin(),
                          trimmed.selection.col_indices.end(), std::back_inserter(kept));
    report.kept_side = static_cast<int>(kept.size());
    if (kept.size() >= 2) {
      const Graph trimmed_graph = h.induced(kept);
      if (trimmed_graph.m() > 0) {
        rect::ZeroRectangleResult ones =
            rect::find_allones_rectangle(trimmed_graph.adjacency, budget);
        report.allones_side = ones.selection.min_side();
        const std::vector<int>& x_local = ones.selection.row_indices;
        const std::vector<int>& y_local = ones.selection.col_indices;

        // Surplus-inequality accounting on H = G[X u Y].
        const long long t = ones.selection.min_side();
        auto complement_missing = [&](const std::vector<int>& side) {
          long long missing = 0;
          for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j)
              if (!trimmed_graph.adjacency.get(side[i], side[j])) ++missing;
          return missing;
        };
        const long long x_missing = complement_missing(x_local);
        const long long y_missing = complement_missing(y_local);
        report.surplus_inequality_lhs = report.alpha_hat * sqrt_m;
        report.surplus_inequality_rhs =
            (static_cast<double>(t) + static_cast<double>(x_missing) +
             static_cast<double>(y_missing)) / 2.0;

        std::vector<int> x_kept;
        for (int i : x_local) x_kept.push_back(kept[static_cast<std::size_t>(i)]);
        const Graph gx = h.induced(x_kept);
        std::vector<int> inner = graphs::turan_clique(gx.adjacency);
        std::vector<int> mapped;
        for (int i : inner) mapped.push_back(x_kept[static_cast<std::size_t>(i)]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped.size() > best.size()) best = std::move(mapped);
        else report.used_fallback = true;
      }
    }
  } catch (const PartialResult&) {
    report.used_fallback = true;
  }

  // Map back to the original vertex ids.
  for (int& v : best) v = active[static_cast<std::size_t>(v)];
  std::sort(best.begin(), best.end());
  for (std::size_t i = 0; i < best.size(); ++i)
    for (std::size_t j = i + 1; j < best.size(); ++j)
      if (!g.adjacency.get(best[i], best[j]))
        throw NumericalError("inverse_maxcut_clique: output is not a clique");
  report.clique = std::move(best);
  return report;
}

}  // namespace matcut::mc
