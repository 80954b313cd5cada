#include "matcut/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "matcut/errors.hpp"
#include "matcut/rng.hpp"

namespace matcut::gen {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Binomial count via geometric skips; O(expected successes) instead of O(n).
long long binomial_count(long long n, double p, CounterRng& rng) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return n;
  long long count = 0;
  const double log_q = std::log1p(-p);
  double position = 0.0;
  while (true) {
    const double u = rng.uniform_positive();
    position += 1.0 + std::floor(std::log(u) / log_q);
    if (position > static_cast<double>(n)) break;
    ++count;
  }
  return count;
}

std::vector<int> random_subset(int k, int ell, CounterRng& rng) {
  std::set<int> chosen;
  while (static_cast<int>(chosen.size()) < ell)
    chosen.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(k))));
  return {chosen.begin(), chosen.end()};
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

double binomial_choose_log(int n, int k) {
  double s = 0.0;
  for (int i = 0; i < k; ++i)
    s += std::log(static_cast<double>(n - i)) - std::log(static_cast<double>(i + 1));
  return s;
}

}  // namespace

TightExample gen_tight_example(const TightExampleParams& params) {
  if (params.ell < 3) throw ContractViolation("gen_tight_example: ell must be at least 3");
  const int k = params.ground_set;
  if (k <= params.ell) throw ContractViolation("gen_tight_example: ground set too small");
  const double p = std::pow(static_cast<double>(k), 1.5 - static_cast<double>(params.ell));
  const double expected_family = p * std::exp(binomial_choose_log(k, params.ell));
  if (expected_family < 2.0)
    throw ContractViolation("gen_tight_example: expected family size below 2, increase k");

  for (int attempt = 0; attempt < 8; ++attempt) {
    CounterRng rng(params.seed, static_cast<std::uint64_t>(attempt));
    // Subset count is binomial over all ell-subsets; the members are then
    // drawn uniformly with duplicate rejection.
    const long long total_subsets = std::llround(std::exp(binomial_choose_log(k, params.ell)));
    const long long count = binomial_count(total_subsets, p, rng);

    std::vector<std::vector<int>> family;
    std::set<std::vector<int>> dedup;
    long long guard = 0;
    while (static_cast<long long>(family.size()) < count && guard < 64 * count + 64) {
      ++guard;
      std::vector<int> s = random_subset(k, params.ell, rng);
      if (dedup.insert(s).second) family.push_back(std::move(s));
    }

    // Prune pairs intersecting in two or more elements, dropping the later
    // set of each offending pair in lexicographic pair order.
    std::vector<bool> dropped(family.size(), false);
    long long pruned = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (dropped[i]) continue;
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (dropped[j]) continue;
        if (intersection_size(family[i], family[j]) >= 2) {
          dropped[j] = true;
          ++pruned;
        }
      }
    }
    std::vector<std::vector<int>> kept;
    for (std::size_t i = 0; i < family.size(); ++i)
      if (!dropped[i]) kept.push_back(family[i]);

    const int n = static_cast<int>(kept.size() / 2);
    if (n < 1) continue;  // retry with a derived seed

    RealMatrix u(n, k), v(k, n);
    for (int i = 0; i < n; ++i)
      for (int e : kept[static_cast<std::size_t>(i)]) u(i, e) = 1.0;
    for (int j = 0; j < n; ++j)
      for (int e : kept[static_cast<std::size_t>(n + j)]) v(e, j) = 1.0;

    BooleanMatrix m(n, n);
    long long sharing_one = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int inter = intersection_size(kept[static_cast<std::size_t>(i)],
                                            kept[static_cast<std::size_t>(n + j)]);
        if (inter >= 2)
          throw NumericalError("gen_tight_example: pruning left an intersecting pair");
        if (inter == 1) {
          m.set(i, j, true);
          ++sharing_one;
        }
      }

    TightExample out;
    out.factorization = make_factorization(std::move(u), std::move(v), m);
    out.matrix = std::move(m);
    out.family_sampled = count;
    out.pairs_pruned = pruned;
    out.pairs_sharing_one = sharing_one;
    out.sample_probability = p;
    out.attempts_used = attempt + 1;
    if (out.factorization.reconstruction_error != 0.0)
      throw NumericalError("gen_tight_example: factorization is not exact");
    return out;
  }
  throw NumericalError("gen_tight_example: family too small after 8 seeded attempts");
}

BooleanMatrix gen_point_line(const PointLineParams& params) {
  if (params.q < 1 || params.q > params.p)
    throw ContractViolation("gen_point_line: need 1 <= q <= p");
  if (params.modular && !is_prime(params.p))
    throw ContractViolation("gen_point_line: modular variant requires a prime p");

  const int q = params.q;
  const int p = params.p;
  const int size = q * p;
  BooleanMatrix m(size, size);
  // Row (x, x'), column (y, y') with x, y in 1..q and x', y' in 0..p-1.
  for (int x = 1; x <= q; ++x)
    for (int xp = 0; xp < p; ++xp) {
      const int row = (x - 1) * p + xp;
      for (int y = 1; y <= q; ++y) {
        if (params.modular) {
          const int yp = (x * y + xp) % p;
          m.set(row, (y - 1) * p + yp, true);
        } else {
          const int yp = x * y + xp;
          if (yp < p) m.set(row, (y - 1) * p + yp, true);
        }
      }
    }
  return m;
}

BooleanMatrix gen_random_boolean(int rows, int cols, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0))
    throw ContractViolation("gen_random_boolean: density must lie in [0,1]");
  BooleanMatrix m(rows, cols);
  CounterRng rng(seed);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng.uniform() < density) m.set(r, c, true);
  return m;
}

BlowupResult gen_permutation_blowup(const std::vector<int>& row_block_sizes,
                                    const std::vector<int>& col_block_sizes,
                                    std::uint64_t seed) {
  if (row_block_sizes.size() != col_block_sizes.size() || row_block_sizes.empty())
    throw ContractViolation("gen_permutation_blowup: block lists must align and be nonempty");
  for (int s : row_block_sizes)
    if (s < 1) throw ContractViolation("gen_permutation_blowup: block sizes must be positive");
  for (int s : col_block_sizes)
    if (s < 1) throw ContractViolation("gen_permutation_blowup: block sizes must be positive");

  const int blocks = static_cast<int>(row_block_sizes.size());
  int rows = 0, cols = 0;
  for (int s : row_block_sizes) rows += s;
  for (int s : col_block_sizes) cols += s;

  CounterRng rng(seed);
  // Seeded permutation pairing row groups with column groups, plus seeded
  // interleavings so the blocks need not be contiguous.
  std::vector<int> perm(static_cast<std::size_t>(blocks));
  for (int i = 0; i < blocks; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = blocks - 1; i > 0; --i)
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);

  auto shuffled_assignment = [&](const std::vector<int>& sizes, int total) {
    std::vector<int> owner(static_cast<std::size_t>(total));
    int at = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b)
      for (int i = 0; i < sizes[b]; ++i) owner[static_cast<std::size_t>(at++)] = static_cast<int>(b);
    for (int i = total - 1; i > 0; --i)
      std::swap(owner[static_cast<std::size_t>(i)],
                owner[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
    return owner;
  };
  const std::vector<int> row_owner = shuffled_assignment(row_block_sizes, rows);
  const std::vector<int> col_owner = shuffled_assignment(col_block_sizes, cols);

  BooleanMatrix m(rows, cols);
  RealMatrix u(rows, blocks), v(blocks, cols);
  for (int r = 0; r < rows; ++r) u(r, row_owner[static_cast<std::size_t>(r)]) = 1.0;
  for (int c = 0; c < cols; ++c)
    v(perm[static_cast<std::size_t>(col_owner[static_cast<std::size_t>(c)])], c) = 1.0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (perm[static_cast<std::size_t>(col_owner[static_cast<std::size_t>(c)])] ==
          row_owner[static_cast<std::size_t>(r)])
        m.set(r, c, true);

  BlowupResult out;
  out.factorization = make_factorization(std::move(u), std::move(v), m);
  out.matrix = std::move(m);
  if (out.factorization.reconstruction_error != 0.0 || out.factorization.product_norm() != 1.0)
    throw NumericalError("gen_permutation_blowup: certificate is not exact");
  return out;
}

mc::Graph gen_complete(int n) {
  if (n < 1) throw ContractViolation("gen_complete: need at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return mc::Graph::from_edges(n, std::move(edges));
}

mc::Graph gen_disjoint_cliques(const std::vector<int>& sizes) {
  if (sizes.empty()) throw ContractViolation("gen_disjoint_cliques: need at least one block");
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (int s : sizes) {
    if (s < 1) throw ContractViolation("gen_disjoint_cliques: block sizes must be positive");
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b) edges.emplace_back(n + a, n + b);
    n += s;
  }
  return mc::Graph::from_edges(n, std::move(edges));
}

mc::Graph gen_bipartite_complete(int a, int b) {
  if (a < 1 || b < 1) throw ContractViolation("gen_bipartite_complete: sides must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return mc::Graph::from_edges(a + b, std::move(edges));
}

mc::Graph gen_cycle(int n) {
  if (n < 3) throw ContractViolation("gen_cycle: need at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return mc::Graph::from_edges(n, std::move(edges));
}

mc::Graph gen_path(int n) {
  if (n < 2) throw ContractViolation("gen_path: need at least two vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return mc::Graph::from_edges(n, std::move(edges));
}

mc::Graph gen_random_graph(int n, double density, std::uint64_t seed) {
  if (n < 1) throw ContractViolation("gen_random_graph: need at least one vertex");
  if (!(density >= 0.0 && density <= 1.0))
    throw ContractViolation("gen_random_graph: density must lie in [0,1]");
  CounterRng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.uniform() < density) edges.emplace_back(a, b);
  return mc::Graph::from_edges(n, std::move(edges));
}

}  // namespace matcut::gen
