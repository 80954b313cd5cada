#include <doctest.h>

#include <cmath>

#include "matcut/errors.hpp"
#include "matcut/gamma2.hpp"
#include "matcut/generators.hpp"
#include "matcut/graph_structure.hpp"
#include "matcut/rng.hpp"

using namespace matcut;

namespace {

BooleanMatrix lower_triangular_2x2() {
  BooleanMatrix m(2, 2);
  m.set(0, 0, true);
  m.set(1, 0, true);
  m.set(1, 1, true);
  return m;
}

}  // namespace

TEST_CASE("dual objective on the uniform start for I_2 is exactly 1") {
  // I o (u v^T) = I/2 for uniform unit u, v; trace norm 1.
  std::vector<double> u{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  CHECK(gamma2::dual_objective(BooleanMatrix::identity(2).to_real(), u, u) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("dual lower bounds") {
  auto ones = gamma2::gamma2_lower_dual(BooleanMatrix::all_ones(2, 2), 2, 20, 0);
  CHECK(ones.value >= 1.0 - 1e-6);

  auto tri = gamma2::gamma2_lower_dual(lower_triangular_2x2(), 2, 20, 0);
  CHECK(tri.value >= std::sqrt(5.0) / 2.0 - 1e-6);

  // Any witness value is a certified lower bound; recompute it.
  CHECK(gamma2::dual_objective(lower_triangular_2x2().to_real(), tri.u, tri.v) ==
        doctest::Approx(tri.value).epsilon(1e-7));
}

TEST_CASE("normalized trace lower bound closed forms") {
  CHECK(gamma2::gamma2_lower_normalized_trace(BooleanMatrix::all_ones(5, 5)) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gamma2::gamma2_lower_normalized_trace(BooleanMatrix::identity(7)) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gamma2::gamma2_lower_normalized_trace(lower_triangular_2x2()) ==
        doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-9));
}

TEST_CASE("als certifies gamma2 = 1 families") {
  auto ones = gamma2::gamma2_upper_als(BooleanMatrix::all_ones(3, 3), 3, 20, 0);
  CHECK(ones.reconstruction_error <= 1e-6);
  CHECK(ones.product_norm() <= 1.0 + 1e-6);

  auto eye = gamma2::gamma2_upper_als(BooleanMatrix::identity(4), 4, 20, 0);
  CHECK(eye.reconstruction_error <= 1e-6);
  CHECK(eye.product_norm() <= 1.0 + 1e-6);
}

TEST_CASE("als rejects the all-zero matrix") {
  CHECK_THROWS_AS(gamma2::gamma2_upper_als(BooleanMatrix(3, 3), 3, 5, 0), ContractViolation);
}

TEST_CASE("als stays within the degeneracy-split certificate on point-line input") {
  BooleanMatrix m = gen::gen_point_line({4, 7, true});
  auto f = gamma2::gamma2_upper_als(m, 28, 40, 0);
  CHECK(f.reconstruction_error <= 1e-6);
  CHECK(f.product_norm() <= 2.0 * std::sqrt(4.0) + 1e-9);
  // It must also dominate the dual lower bound.
  auto dual = gamma2::gamma2_lower_dual(m, 2, 20, 0);
  CHECK(f.product_norm() + 1e-6 >= dual.value);
}

TEST_CASE("psd exact value is the maximum diagonal entry") {
  CHECK(gamma2::gamma2_psd_exact(RealMatrix::identity(5)) == doctest::Approx(1.0));
  RealMatrix d(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  CHECK(gamma2::gamma2_psd_exact(d) == doctest::Approx(3.0));
  // K_3 adjacency plus I is PSD with unit diagonal.
  RealMatrix k3(3, 3, 1.0);
  CHECK(gamma2::gamma2_psd_exact(k3) == doctest::Approx(1.0));
  RealMatrix not_psd(2, 2);
  not_psd(0, 1) = 1.0;
  not_psd(1, 0) = 1.0;
  CHECK_THROWS_AS(gamma2::gamma2_psd_exact(not_psd), ContractViolation);
}

TEST_CASE("blowup certificate detects shuffled block structure") {
  auto blowup = gen::gen_permutation_blowup({2, 3, 1}, {1, 2, 2}, 99);
  auto cert = gamma2::blowup_certificate(blowup.matrix);
  REQUIRE(cert.has_value());
  CHECK(cert->product_norm() == doctest::Approx(1.0));
  CHECK(cert->reconstruction_error == 0.0);

  CHECK(!gamma2::blowup_certificate(lower_triangular_2x2()).has_value());
}

TEST_CASE("bracket nails permutation blow-ups and identities") {
  for (const BooleanMatrix& m : {BooleanMatrix::identity(8), BooleanMatrix::all_ones(5, 7)}) {
    auto b = gamma2::gamma2_bracket(m, Budget::fast(), 0);
    CHECK(b.lower >= 1.0 - 1e-6);
    CHECK(b.upper <= 1.0 + 1e-6);
  }
}

TEST_CASE("bracket on a point-line incidence matrix") {
  BooleanMatrix m = gen::gen_point_line({9, 11, true});
  auto b = gamma2::gamma2_bracket(m, Budget::fast(), 1);
  CHECK(b.lower >= 0.3 * 3.0);         // 0.3 sqrt(q)
  CHECK(b.upper <= 2.0 * 3.0 + 1e-9);  // 2 sqrt(q) via the degeneracy split
  CHECK(b.lower <= b.upper + 1e-6);
}

TEST_CASE("bracket sanity and submatrix monotonicity on random matrices") {
  CounterRng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    BooleanMatrix m = gen::gen_random_boolean(7 + trial, 9, 0.4, 700 + trial);
    if (m.all_zero()) continue;
    auto b = gamma2::gamma2_bracket(m, Budget::fast(), trial);
    CHECK(b.lower <= b.upper + 1e-6);

    // Random nonempty submatrix: certified upper of the parent dominates the
    // certified lower of the child.
    std::vector<int> rows, cols;
    for (int r = 0; r < m.rows(); ++r)
      if (rng.uniform() < 0.6) rows.push_back(r);
    for (int c = 0; c < m.cols(); ++c)
      if (rng.uniform() < 0.6) cols.push_back(c);
    if (rows.empty() || cols.empty()) continue;
    BooleanMatrix sub =
        SubmatrixSelection::make(rows, cols, m.rows(), m.cols()).extract(m);
    if (sub.all_zero()) continue;
    auto bs = gamma2::gamma2_bracket(sub, Budget::fast(), trial);
    CHECK(b.upper + 1e-6 >= bs.lower);
  }
}

TEST_CASE("dual evaluator is scale-equivariant in the matrix argument") {
  CounterRng rng(17);
  RealMatrix m(4, 5);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 5; ++c) m(r, c) = 2.0 * rng.uniform() - 1.0;
  std::vector<double> u = rng.normal_vector(4);
  std::vector<double> v = rng.normal_vector(5);
  const double base = gamma2::dual_objective(m, u, v);
  RealMatrix scaled = m;
  scaled.scale(3.5);
  CHECK(gamma2::dual_objective(scaled, u, v) == doctest::Approx(3.5 * base).epsilon(1e-9));
}

TEST_CASE("degree-weighted dual start is invariant under duplicating every row") {
  BooleanMatrix m = gen::gen_random_boolean(5, 6, 0.45, 31);
  REQUIRE(!m.all_zero());
  BooleanMatrix doubled(10, 6);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 6; ++c)
      if (m.get(r, c)) {
        doubled.set(2 * r, c, true);
        doubled.set(2 * r + 1, c, true);
      }

  auto start_value = [](const BooleanMatrix& b) {
    std::vector<double> u(static_cast<std::size_t>(b.rows()));
    const double f = static_cast<double>(b.ones());
    for (int r = 0; r < b.rows(); ++r)
      u[static_cast<std::size_t>(r)] = std::sqrt(static_cast<double>(b.row_ones(r)) / f);
    std::vector<double> v(static_cast<std::size_t>(b.cols()),
                          1.0 / std::sqrt(static_cast<double>(b.cols())));
    return gamma2::dual_objective(b.to_real(), u, v);
  };
  CHECK(start_value(m) == doctest::Approx(start_value(doubled)).epsilon(1e-9));

  // The ALS certificate is computed on the deduplicated form, so it is
  // trivially unchanged by duplication.
  auto dedup = gamma2::gamma2_upper_als(m, 5, 10, 3);
  auto dedup_again = gamma2::gamma2_upper_als(m, 5, 10, 3);
  CHECK(dedup.product_norm() == doctest::Approx(dedup_again.product_norm()));
}

TEST_CASE("sqrt-rank route respects the dual lower bound") {
  // I_9 has rank 9 but gamma2 = 1; the winning route must not be sqrt-rank.
  auto b = gamma2::gamma2_bracket(BooleanMatrix::identity(9), Budget::fast(), 0);
  CHECK(b.sqrt_rank_bound == doctest::Approx(3.0));
  CHECK(b.upper <= 1.0 + 1e-6);
  CHECK(b.upper_route != "sqrt-rank");
}
