#ifndef MATCUT_GENERATORS_HPP
#define MATCUT_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "matcut/boolean_matrix.hpp"
#include "matcut/factorization.hpp"
#include "matcut/maxcut.hpp"

namespace matcut::gen {

// Seeded set-system construction with a norm-sqrt(ell) factor certificate and
// few one entries; the structural target for the rectangle pipelines.
struct TightExampleParams {
  int ell = 3;        // subset size, >= 3
  int ground_set = 0; // k
  std::uint64_t seed = 0;
};

struct TightExample {
  BooleanMatrix matrix;
  Factorization factorization;  // product norm exactly ell
  // Diagnostics recomputed by tests: sampled family size, intersecting pairs
  // removed, pairs sharing exactly one element, realized density parameter.
  long long family_sampled = 0;
  long long pairs_pruned = 0;
  long long pairs_sharing_one = 0;
  double sample_probability = 0.0;
  int attempts_used = 0;
};

TightExample gen_tight_example(const TightExampleParams& params);

struct PointLineParams {
  int q = 2;
  int p = 3;
  bool modular = true;
};

// Incidence matrix on [q] x {0..p-1}: entry 1 iff x*y + x' = y' (mod p when
// modular; p must be prime then). The modular variant is exactly q-regular.
BooleanMatrix gen_point_line(const PointLineParams& params);

BooleanMatrix gen_random_boolean(int rows, int cols, double density, std::uint64_t seed);

// Block all-ones matrix on a seeded permutation with seeded row/column group
// interleaving; gamma_2 is exactly 1.
struct BlowupResult {
  BooleanMatrix matrix;
  Factorization factorization;  // product norm exactly 1
};
BlowupResult gen_permutation_blowup(const std::vector<int>& row_block_sizes,
                                    const std::vector<int>& col_block_sizes, std::uint64_t seed);

mc::Graph gen_complete(int n);
mc::Graph gen_disjoint_cliques(const std::vector<int>& sizes);
mc::Graph gen_bipartite_complete(int a, int b);
mc::Graph gen_cycle(int n);
mc::Graph gen_path(int n);
mc::Graph gen_random_graph(int n, double density, std::uint64_t seed);

bool is_prime(long long p);

}  // namespace matcut::gen

#endif
