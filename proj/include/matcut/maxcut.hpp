#ifndef MATCUT_MAXCUT_HPP
#define MATCUT_MAXCUT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matcut/boolean_matrix.hpp"
#include "matcut/budget.hpp"
#include "matcut/real_matrix.hpp"

namespace matcut::mc {

// Simple undirected graph: sorted deduplicated edge list plus the adjacency
// matrix view.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // a < b, sorted
  BooleanMatrix adjacency;

  long long m() const { return static_cast<long long>(edges.size()); }

  // Sorts, deduplicates and validates; *had_duplicates reports whether any
  // duplicate or mirrored edge was dropped.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
                          bool* had_duplicates = nullptr);
  Graph induced(const std::vector<int>& vertices) const;
  std::vector<int> vertices_with_edges() const;
};

struct CutReport {
  std::vector<std::uint8_t> partition;  // 0 = side X, 1 = side Y
  long long cut_size = 0;
  double surplus = 0.0;  // cut_size - m/2, half-integral
  std::string method;
  int trials_used = 0;
};

// Recount of crossing edges; throws if it disagrees with the report.
void verify_cut(const Graph& g, const CutReport& report);

// Trace norm of the adjacency matrix.
double graph_energy(const Graph& g);

// m/2 + (sqrt(8m+1) - 1)/8.
double edwards_bound(long long m);

// Exhaustive over 2^(n-1) bipartitions via gray-code updates; n <= 24.
CutReport maxcut_exact(const Graph& g);

// Single-flip hill climbing from random partitions.
CutReport maxcut_local_search(const Graph& g, int restarts, std::uint64_t seed);

// Unit vectors from the negative eigenspace; the Gram matrix gets a unit
// diagonal before factoring.
struct RoundingEmbedding {
  RealMatrix vectors;           // n x k, unit rows
  RealMatrix m_prime;           // PSD, unit diagonal
  double negative_eigenvalue_sum = 0.0;  // = -energy/2
};
RoundingEmbedding spectral_embedding(const Graph& g);

struct RoundingResult {
  CutReport best;
  double closed_form_expectation = 0.0;  // sum over edges of arccos(<x_a,x_b>)/pi
  double mean_cut = 0.0;
  double sample_std = 0.0;  // per-trial standard deviation
};
RoundingResult hyperplane_round_surplus(const RoundingEmbedding& emb, const Graph& g, int trials,
                                        std::uint64_t seed);

// Greedy derandomization of the part-orientation argument: the combined
// surplus is at least the sum of the parts' surpluses, exactly.
CutReport surplus_compose(const Graph& g, const std::vector<std::vector<int>>& parts,
                          const std::vector<CutReport>& part_cuts);

struct InverseMaxcutReport {
  std::vector<int> clique;
  double alpha_hat = 0.0;       // best-found surplus / sqrt(m)
  double energy = 0.0;
  double energy_surplus_ratio = 0.0;
  double epsilon = 0.0;         // 1/(72 alpha^2) after clamping
  bool epsilon_clamped = false;
  int kept_side = 0;            // vertices surviving the trace-norm trim
  int allones_side = 0;         // biclique side recovered from the complement
  double surplus_inequality_lhs = 0.0;  // alpha sqrt(m)
  double surplus_inequality_rhs = 0.0;  // (t + x + y)/2
  bool used_fallback = false;   // direct greedy clique won
  std::string maxcut_method;
};

// Full pipeline: surplus estimate, energy bookkeeping, trace-norm trim,
// all-ones recovery on the complement, greedy clique. Total by construction:
// the direct greedy clique backs every stage.
InverseMaxcutReport inverse_maxcut_clique(const Graph& g, const Budget& budget,
                                          std::uint64_t seed = 0);

}  // namespace matcut::mc

#endif
