#ifndef MATCUT_GRAPH_STRUCTURE_HPP
#define MATCUT_GRAPH_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "matcut/boolean_matrix.hpp"
#include "matcut/budget.hpp"
#include "matcut/factorization.hpp"

namespace matcut::graphs {

// Bipartite graph seen through its bi-adjacency matrix; rows are side A,
// columns side B. Degree caches live in the matrix.
struct BipartiteGraph {
  BooleanMatrix adjacency;

  int side_a() const { return adjacency.rows(); }
  int side_b() const { return adjacency.cols(); }
};

// One peeled vertex: side (false = row, true = column), index within its
// side, and its remaining degree at removal time.
struct PeelStep {
  bool is_column = false;
  int index = 0;
  int degree_at_removal = 0;
};

struct DegeneracyReport {
  int degeneracy = 0;
  std::vector<PeelStep> elimination_order;
};

// Min-degree peeling; ties resolved side A first, then lowest index.
// degeneracy = max over steps of the removed vertex's remaining degree.
DegeneracyReport degeneracy_order(const BipartiteGraph& g);
DegeneracyReport degeneracy_order(const BooleanMatrix& m);

struct C4Violation {
  int row1 = 0, row2 = 0, col1 = 0, col2 = 0;
};

// No 2x2 all-ones submatrix. Returns the lexicographically first violating
// quadruple otherwise.
std::optional<C4Violation> find_c4(const BooleanMatrix& m);
inline bool is_c4_free(const BooleanMatrix& m) { return !find_c4(m).has_value(); }

// Splits M = M1 + M2 along the peeling order so M1 has bounded row counts and
// M2 bounded column counts; the certified bound is
// sqrt(max row ones of M1) + sqrt(max col ones of M2) <= 2 sqrt(degeneracy).
struct DegeneracySplit {
  double bound = 0.0;
  Factorization part_rows;  // identity right factor
  Factorization part_cols;  // identity left factor
  BooleanMatrix m1;
  BooleanMatrix m2;
};
DegeneracySplit gamma2_upper_from_degeneracy(const BooleanMatrix& m);

// Combined single-witness factorization of M built from the split parts.
Factorization degeneracy_split_factorization(const BooleanMatrix& m);

struct RegularizedSubmatrix {
  SubmatrixSelection selection;
  bool cap_on_rows = false;  // which side carries the max-degree cap
  double average_degree = 0.0;  // realized d'
  long long edge_count = 0;
};

// Passes to an induced submatrix with min degree >= d'/2 on both sides and
// max degree <= 6 d' on one side, d' at least a third of the input average
// degree. Greedy max-average-degree peeling realizes both extraction steps.
RegularizedSubmatrix regularize_degrees(const BooleanMatrix& m);

// Trace-norm certificate on the regularized submatrix with the
// degree-weighted/uniform unit-vector pair; a valid gamma_2 lower bound.
// Requires a four-cycle-free nonzero matrix.
double c4_lower_certificate(const BooleanMatrix& m);

// Greedy dense-core extraction followed by the monochromatic machinery on the
// core's complement. Best-effort: the returned all-ones block is verified but
// may be smaller than t.
struct ZarankiewiczResult {
  SubmatrixSelection selection;
  int core_rows = 0, core_cols = 0;
  long long core_edges = 0;
};
ZarankiewiczResult zarankiewicz_allones(const BooleanMatrix& m, double gamma_hint, int t,
                                        const Budget& budget = Budget::fast());

// Greedy clique on a simple undirected adjacency matrix; size is at least
// n/(dbar+1) for dbar the complement's average degree.
std::vector<int> turan_clique(const BooleanMatrix& adjacency);

// Smallest eigenvalue of the induced subgraph on A u B u C, where |A|=|B|=|C|,
// A-B has no edges and (A u B) x C is complete. Guaranteed <= -k/3.
double tripartite_min_eigenvalue(const std::vector<int>& a, const std::vector<int>& b,
                                 const std::vector<int>& c, const BooleanMatrix& adjacency);

struct CliqueResult {
  std::vector<int> clique;
  int biclique_side = 0;            // all-ones block side found in the adjacency
  int complement_biclique_side = 0; // empty-pair side found inside G[X]
  int independence_cap = 0;         // ceil(3 lambda + 1)
};

// Clique extraction for graphs whose smallest adjacency eigenvalue is at
// least -lambda: biclique via zarankiewicz_allones, then a greedy clique
// inside one class, cross-checked against the direct greedy clique.
CliqueResult smallest_eigenvalue_clique(const BooleanMatrix& adjacency, double lambda,
                                        const Budget& budget = Budget::fast());

// Shared helpers for adjacency-matrix inputs.
void require_simple_adjacency(const BooleanMatrix& adjacency);
long long count_edges(const BooleanMatrix& adjacency);

}  // namespace matcut::graphs

#endif
