// Acceptance suite: one criterion per check, one pass/fail line each.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "matcut/discrepancy.hpp"
#include "matcut/gamma2.hpp"
#include "matcut/generators.hpp"
#include "matcut/graph_structure.hpp"
#include "matcut/linalg.hpp"
#include "matcut/maxcut.hpp"
#include "matcut/rectangle.hpp"
#include "matcut/rng.hpp"
#include "oracles.hpp"

using namespace matcut;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

// All connected fixtures with n <= 20 and no isolated vertices.
std::vector<mc::Graph> connected_corpus() {
  std::vector<mc::Graph> graphs;
  for (int n : {3, 4, 5, 6, 7, 9}) graphs.push_back(gen::gen_complete(n));
  for (int n : {4, 5, 7, 9, 12, 16, 20}) graphs.push_back(gen::gen_cycle(n));
  for (int n : {2, 6, 11, 17}) graphs.push_back(gen::gen_path(n));
  graphs.push_back(gen::gen_bipartite_complete(3, 3));
  graphs.push_back(gen::gen_bipartite_complete(2, 5));
  graphs.push_back(gen::gen_bipartite_complete(4, 7));
  // Two triangles joined by a bridge.
  graphs.push_back(mc::Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}));
  // Seeded random connected graphs (retry density until connected).
  for (int seed = 0; seed < 12; ++seed) {
    for (double density = 0.3;; density += 0.1) {
      mc::Graph g = gen::gen_random_graph(8 + seed, density, 4000 + seed);
      std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
      std::vector<int> stack{0};
      comp[0] = 0;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : g.edges) {
          const int u = a == v ? b : (b == v ? a : -1);
          if (u >= 0 && comp[static_cast<std::size_t>(u)] < 0) {
            comp[static_cast<std::size_t>(u)] = 0;
            stack.push_back(u);
          }
        }
      }
      bool connected = true;
      for (int flag : comp) connected = connected && flag == 0;
      if (connected) {
        graphs.push_back(g);
        break;
      }
    }
  }
  return graphs;
}

void criterion_edwards_equality() {
  for (int n : {3, 5, 7, 9}) {
    const auto start = std::chrono::steady_clock::now();
    const mc::Graph g = gen::gen_complete(n);
    const mc::CutReport cut = mc::maxcut_exact(g);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const long long expected = static_cast<long long>(n / 2) * ((n + 1) / 2);
    require(cut.cut_size == expected, "K_" + std::to_string(n) + " cut is not floor*ceil");
    require(std::abs(static_cast<double>(cut.cut_size) - mc::edwards_bound(g.m())) < 1e-9,
            "K_" + std::to_string(n) + " does not meet the Edwards bound exactly");
    require(elapsed < 1.0, "K_" + std::to_string(n) + " took over a second");
  }
}

void criterion_surplus_floor() {
  for (const mc::Graph& g : connected_corpus()) {
    if (g.n > 20) continue;
    const mc::CutReport cut = mc::maxcut_exact(g);
    require(6 * cut.cut_size - 3 * g.m() >= g.n,
            "surplus below n/6 on a corpus graph with n=" + std::to_string(g.n));
  }
}

void criterion_blowup_brackets() {
  const auto start = std::chrono::steady_clock::now();
  int built = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    CounterRng rng(900 + seed);
    std::vector<int> sizes;
    const int blocks = 1 + static_cast<int>(rng.below(4));
    for (int b = 0; b < blocks; ++b) sizes.push_back(1 + static_cast<int>(rng.below(4)));
    const gen::BlowupResult blowup = gen::gen_permutation_blowup(sizes, sizes, seed);
    const gamma2::Gamma2Bracket bracket =
        gamma2::gamma2_bracket(blowup.matrix, Budget::fast(), seed);
    require(bracket.lower >= 1.0 - 1e-6, "blow-up lower bound drifted below 1");
    require(bracket.upper <= 1.0 + 1e-6, "blow-up upper bound drifted above 1");
    ++built;
  }
  require(built >= 10, "fewer than 10 blow-ups exercised");
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(elapsed < 5.0, "blow-up brackets took " + std::to_string(elapsed) + "s (budget 5s)");
}

void criterion_point_line_shape() {
  const auto start = std::chrono::steady_clock::now();
  const int qs[] = {2, 3, 4, 5, 8, 9};
  const int ps[] = {5, 7, 7, 11, 11, 13};
  for (int i = 0; i < 6; ++i) {
    const BooleanMatrix m = gen::gen_point_line({qs[i], ps[i], true});
    const double root_q = std::sqrt(static_cast<double>(qs[i]));
    const double lower = graphs::c4_lower_certificate(m) / root_q;
    const double upper = graphs::gamma2_upper_from_degeneracy(m).bound / root_q;
    require(lower >= 0.25 && lower <= 1.1,
            "q=" + std::to_string(qs[i]) + ": lower/sqrt(q)=" + std::to_string(lower) +
                " outside [0.25, 1.1]");
    require(upper >= 1.0 && upper <= 2.05,
            "q=" + std::to_string(qs[i]) + ": upper/sqrt(q)=" + std::to_string(upper) +
                " outside [1, 2.05]");
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(elapsed < 60.0, "point-line shape sweep exceeded 60s");
}

void criterion_rectangle_soundness() {
  const double densities[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  int runs = 0;
  for (int i = 0; runs < 1000; ++i) {
    const int rows = 3 + (i * 7) % 62;
    const int cols = 3 + (i * 11) % 62;
    const double density = densities[i % 5];
    const BooleanMatrix m = gen::gen_random_boolean(rows, cols, density, 20000 + i);
    if (m.rows() == 0 || m.cols() == 0) continue;
    ++runs;
    const rect::MonoRectangle mono = rect::find_mono_rectangle(m, Budget::fast());
    const BooleanMatrix block = mono.selection.extract(m);
    require(mono.color == 0 ? block.all_zero() : block.is_all_ones(),
            "recount failure on seeded run " + std::to_string(i));
    if (std::min(rows, cols) <= 12) {
      const int oracle = oracles::max_mono_rectangle_side(m, mono.color == 1);
      require(mono.selection.min_side() <= oracle,
              "returned side exceeds the exhaustive maximum on run " + std::to_string(i));
    }
  }
}

void criterion_brilliance_totality() {
  int runs = 0;
  for (int i = 0; runs < 1000; ++i) {
    const int rows = 2 + (i * 5) % 14;
    const int cols = 2 + (i * 3) % 14;
    const BooleanMatrix m = gen::gen_random_boolean(rows, cols, 0.15 + 0.1 * (i % 8), 50000 + i);
    if (m.all_zero()) continue;
    ++runs;
    Factorization f;
    switch (i % 3) {
      case 0:
        f = make_factorization(m.to_real(), RealMatrix::identity(cols), m);
        break;
      case 1:
        f = make_factorization(RealMatrix::identity(rows), m.to_real(), m);
        break;
      default: {
        const linalg::SvdData s = linalg::svd(m.to_real());
        RealMatrix u(rows, static_cast<int>(s.singular_values.size()));
        RealMatrix v(static_cast<int>(s.singular_values.size()), cols);
        for (int c = 0; c < u.cols(); ++c) {
          const double root = std::sqrt(std::max(0.0, s.singular_values[static_cast<std::size_t>(c)]));
          for (int r = 0; r < rows; ++r) u(r, c) = s.left(r, c) * root;
          for (int j = 0; j < cols; ++j) v(c, j) = s.right(c, j) * root;
        }
        f = make_factorization(std::move(u), std::move(v), m);
        require(f.reconstruction_error <= 1e-8, "SVD factorization drifted on run " + std::to_string(i));
        break;
      }
    }
    const rect::BrilliantWitness w = rect::brilliant_scan(m, f);
    require(w.score >= w.threshold - 1e-6, "witness below threshold on run " + std::to_string(i));
  }
}

void criterion_rounding_calibration() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<mc::Graph> graphs = connected_corpus();
  for (int seed = 0; static_cast<int>(graphs.size()) < 50; ++seed)
    graphs.push_back(gen::gen_random_graph(10 + seed % 8, 0.5, 7000 + seed));
  graphs.resize(50);
  constexpr double kPi = 3.14159265358979323846;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::vector<int> active = graphs[i].vertices_with_edges();
    if (active.empty()) continue;
    const mc::Graph h = graphs[i].induced(active);
    const mc::RoundingEmbedding emb = mc::spectral_embedding(h);
    const mc::RoundingResult r = mc::hyperplane_round_surplus(emb, h, 512, 1000 + i);
    const double floor_value = static_cast<double>(h.m()) / 2.0 +
                               mc::graph_energy(h) / (2.0 * kPi) -
                               static_cast<double>(h.n) / kPi;
    require(r.closed_form_expectation >= floor_value - 1e-7,
            "closed-form expectation below the analytic floor on graph " + std::to_string(i));
    const double stderr_mean = r.sample_std / std::sqrt(512.0);
    require(std::abs(r.mean_cut - r.closed_form_expectation) <= 4.0 * stderr_mean + 1e-9,
            "Monte Carlo mean outside 4 sigma on graph " + std::to_string(i));
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(elapsed < 120.0, "rounding calibration exceeded 120s");
}

void criterion_inverse_maxcut() {
  struct Fixture {
    std::string name;
    mc::Graph graph;
    std::size_t min_clique;
  };
  // K_15 minus a near-perfect matching less one edge (6 disjoint edges).
  std::vector<std::pair<int, int>> k15_edges;
  for (int a = 0; a < 15; ++a)
    for (int b = a + 1; b < 15; ++b) k15_edges.emplace_back(a, b);
  std::vector<std::pair<int, int>> removed;
  for (int i = 0; i < 6; ++i) removed.emplace_back(2 * i, 2 * i + 1);
  std::vector<std::pair<int, int>> kept;
  for (const auto& e : k15_edges) {
    bool drop = false;
    for (const auto& r : removed) drop = drop || e == r;
    if (!drop) kept.push_back(e);
  }
  std::vector<Fixture> fixtures;
  fixtures.push_back({"K_9", gen::gen_complete(9), 9});
  fixtures.push_back({"K_7+K_7", gen::gen_disjoint_cliques({7, 7}), 7});
  fixtures.push_back({"K_15-matching", mc::Graph::from_edges(15, kept), 7});
  // Frozen cross-check: the brute-force clique number of the matching fixture
  // is 9 (one endpoint per removed edge plus the three untouched vertices).
  require(oracles::max_clique_size(fixtures.back().graph.adjacency) == 9,
          "fixture clique number changed");
  for (const Fixture& fx : fixtures) {
    const auto start = std::chrono::steady_clock::now();
    const mc::InverseMaxcutReport r = mc::inverse_maxcut_clique(fx.graph, Budget::fast());
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(r.clique.size() >= fx.min_clique,
            fx.name + ": clique " + std::to_string(r.clique.size()) + " below " +
                std::to_string(fx.min_clique));
    require(elapsed < 30.0, fx.name + " exceeded 30s");
  }
}

void criterion_discrepancy_dominance() {
  int total = 0, dominated = 0, at_half = 0;
  for (int i = 0; total < 200; ++i) {
    const int rows = 3 + (i * 3) % 10;
    const int cols = 3 + (i * 5) % 14;
    const BooleanMatrix m =
        gen::gen_random_boolean(rows, cols, 0.15 + 0.1 * (i % 8), 60000 + i);
    if (m.all_zero() || m.is_all_ones()) continue;
    ++total;
    const disc::DiscrepancyEstimate exact = disc::disc_exact_small(m);
    const Factorization f = graphs::degeneracy_split_factorization(m);
    const disc::DiscrepancyEstimate est = disc::disc_lower_rounding(m, f, 128, 70000 + i);
    if (est.value <= exact.value + 1e-9) ++dominated;
    if (est.value >= 0.5 * exact.value - 1e-9) ++at_half;
  }
  require(dominated == total, "rounding exceeded the exact discrepancy somewhere");
  require(at_half * 10 >= total * 8,
          "rounding reached half the exact value on only " + std::to_string(at_half) + "/200");
}

void criterion_generator_certification() {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const gen::TightExample t = gen::gen_tight_example({3, 100, seed});
    require(t.factorization.reconstruction_error == 0.0,
            "tight example factorization not exact at seed " + std::to_string(seed));
    require(std::abs(t.factorization.product_norm() - 3.0) <= 1e-9,
            "tight example certificate is not norm sqrt(3)^2 at seed " + std::to_string(seed));
  }
  for (int q : {2, 3, 5, 7}) {
    const BooleanMatrix m = gen::gen_point_line({q, 11, true});
    for (int r = 0; r < m.rows(); ++r)
      require(m.row_ones(r) == q, "point-line row regularity failed");
    for (int c = 0; c < m.cols(); ++c)
      require(m.col_ones(c) == q, "point-line column regularity failed");
    require(graphs::is_c4_free(m), "point-line instance is not four-cycle-free");
  }
}

struct Criterion {
  int id;
  std::string name;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "edwards-equality", criterion_edwards_equality},
      {2, "surplus-floor", criterion_surplus_floor},
      {3, "blowup-brackets", criterion_blowup_brackets},
      {4, "point-line-shape", criterion_point_line_shape},
      {5, "rectangle-soundness", criterion_rectangle_soundness},
      {6, "brilliance-totality", criterion_brilliance_totality},
      {7, "rounding-calibration", criterion_rounding_calibration},
      {8, "inverse-maxcut-recovery", criterion_inverse_maxcut},
      {9, "discrepancy-dominance", criterion_discrepancy_dominance},
      {10, "generator-certification", criterion_generator_certification},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run();
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::printf("criterion %2d [%s] PASS (%.2fs)\n", c.id, c.name.c_str(), elapsed);
    } catch (const std::exception& e) {
      ++failures;
      std::printf("criterion %2d [%s] FAIL: %s\n", c.id, c.name.c_str(), e.what());
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
