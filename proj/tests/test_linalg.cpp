#include <doctest.h>

#include <cmath>

#include "matcut/errors.hpp"
#include "matcut/linalg.hpp"
#include "matcut/rng.hpp"

using namespace matcut;

namespace {

RealMatrix complete_graph_adjacency(int n) {
  RealMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) a(i, j) = 1.0;
  return a;
}

RealMatrix random_symmetric(int n, std::uint64_t seed) {
  CounterRng rng(seed);
  RealMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = 2.0 * rng.uniform() - 1.0;
      a(i, j) = v;
      a(j, i) = v;
    }
  return a;
}

}  // namespace

TEST_CASE("sym_eigen identity") {
  auto s = linalg::sym_eigen(RealMatrix::identity(2));
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("sym_eigen complete graph spectrum is (n-1, -1, ..., -1)") {
  auto s = linalg::sym_eigen(complete_graph_adjacency(3));
  CHECK(s.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(s.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(s.eigenvalues[2] == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("sym_eigen zero matrix") {
  auto s = linalg::sym_eigen(RealMatrix(3, 3));
  for (double v : s.eigenvalues) CHECK(v == 0.0);
}

TEST_CASE("sym_eigen rejects asymmetric and non-square input") {
  RealMatrix bad(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(linalg::sym_eigen(bad), ContractViolation);
  CHECK_THROWS_AS(linalg::sym_eigen(RealMatrix(2, 3)), ContractViolation);
}

TEST_CASE("sym_eigen reconstruction on random symmetric matrices") {
  for (int n : {2, 5, 11, 30}) {
    RealMatrix a = random_symmetric(n, 100 + static_cast<std::uint64_t>(n));
    auto s = linalg::sym_eigen(a);
    CHECK(max_abs_diff(s.reconstruct(), a) <= 1e-7 * std::max(a.max_abs(), 1.0));
    RealMatrix qtq = s.eigenvectors.transposed().multiplied_by(s.eigenvectors);
    CHECK(max_abs_diff(qtq, RealMatrix::identity(n)) <= 1e-8);
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
      CHECK(s.eigenvalues[i - 1] >= s.eigenvalues[i]);
  }
}

TEST_CASE("svd identity") {
  auto s = linalg::svd(RealMatrix::identity(3));
  for (double v : s.singular_values) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("svd closed form for [[1,0],[1,1]]") {
  // Singular values are the square roots of (3 +- sqrt(5))/2.
  RealMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 0) = 1.0;
  m(1, 1) = 1.0;
  auto s = linalg::svd(m);
  CHECK(s.singular_values[0] ==
        doctest::Approx(std::sqrt((3.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-10));
  CHECK(s.singular_values[1] ==
        doctest::Approx(std::sqrt((3.0 - std::sqrt(5.0)) / 2.0)).epsilon(1e-10));
  CHECK(linalg::trace_norm(s) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
}

TEST_CASE("svd rank-1 all-ones rectangle") {
  RealMatrix m(2, 3, 1.0);
  auto s = linalg::svd(m);
  CHECK(s.singular_values[0] == doctest::Approx(std::sqrt(6.0)).epsilon(1e-10));
  CHECK(s.singular_values[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(max_abs_diff(s.reconstruct(), m) <= 1e-9);
}

TEST_CASE("svd reconstruction and orthonormal factors on random rectangles") {
  CounterRng rng(7);
  for (auto [rows, cols] : {std::pair{5, 3}, {3, 5}, {8, 8}, {12, 4}}) {
    RealMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = 2.0 * rng.uniform() - 1.0;
    auto s = linalg::svd(m);
    CHECK(max_abs_diff(s.reconstruct(), m) <=
          1e-7 * std::max(1.0, s.singular_values.front()));
    const int k = std::min(rows, cols);
    RealMatrix utu = s.left.transposed().multiplied_by(s.left);
    CHECK(max_abs_diff(utu, RealMatrix::identity(k)) <= 1e-8);
    RealMatrix vvt = s.right.multiplied_by(s.right.transposed());
    CHECK(max_abs_diff(vvt, RealMatrix::identity(k)) <= 1e-8);
  }
}

TEST_CASE("trace_norm frozen values") {
  CHECK(linalg::trace_norm(complete_graph_adjacency(5)) == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(linalg::trace_norm(RealMatrix::identity(6)) == doctest::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("trace_norm dominates the Frobenius norm") {
  CounterRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 2 + static_cast<int>(rng.below(6));
    const int cols = 2 + static_cast<int>(rng.below(6));
    RealMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = 2.0 * rng.uniform() - 1.0;
    CHECK(linalg::trace_norm(m) >= m.frobenius_norm() - 1e-9);
  }
}

TEST_CASE("symmetric trace norm equals the absolute eigenvalue sum") {
  for (int n : {3, 6, 10}) {
    RealMatrix a = random_symmetric(n, 300 + static_cast<std::uint64_t>(n));
    auto spec = linalg::sym_eigen(a);
    double abs_sum = 0.0;
    for (double v : spec.eigenvalues) abs_sum += std::abs(v);
    CHECK(linalg::trace_norm(a) == doctest::Approx(abs_sum).epsilon(1e-7));
  }
}

TEST_CASE("singular values are invariant under row/column permutation") {
  CounterRng rng(23);
  RealMatrix m(6, 4);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = 2.0 * rng.uniform() - 1.0;
  auto base = linalg::svd(m);
  RealMatrix shuffled = m.submatrix({3, 0, 5, 1, 4, 2}, {2, 0, 3, 1});
  auto perm = linalg::svd(shuffled);
  for (std::size_t i = 0; i < base.singular_values.size(); ++i)
    CHECK(base.singular_values[i] == doctest::Approx(perm.singular_values[i]).epsilon(1e-8));
}
