#include <doctest.h>

#include <cmath>

#include "matcut/errors.hpp"
#include "matcut/gamma2.hpp"
#include "matcut/generators.hpp"
#include "matcut/rectangle.hpp"
#include "matcut/rng.hpp"
#include "oracles.hpp"

using namespace matcut;

namespace {

Factorization exact_left_factorization(const BooleanMatrix& m) {
  return make_factorization(m.to_real(), RealMatrix::identity(m.cols()), m);
}

}  // namespace

TEST_CASE("brilliant scan on 1x1 and the all-ones 2x2") {
  BooleanMatrix unit(1, 1);
  unit.set(0, 0, true);
  Factorization f = make_factorization(RealMatrix(1, 1, 1.0), RealMatrix(1, 1, 1.0), unit);
  auto w = rect::brilliant_scan(unit, f);
  CHECK(!w.is_column);
  CHECK(w.index == 0);
  CHECK(w.score == doctest::Approx(1.0));
  CHECK(w.threshold == doctest::Approx(1.0));

  BooleanMatrix ones = BooleanMatrix::all_ones(2, 2);
  Factorization rank1 = make_factorization(RealMatrix(2, 1, 1.0), RealMatrix(1, 2, 1.0), ones);
  auto w2 = rect::brilliant_scan(ones, rank1);
  CHECK(!w2.is_column);
  CHECK(w2.index == 0);
  CHECK(w2.score == doctest::Approx(2.0));  // <u1,u1>^2 + <u1,u2>^2
  CHECK(w2.threshold == doctest::Approx(2.0));
}

TEST_CASE("brilliant scan always finds a witness for exact factorizations") {
  for (int seed = 0; seed < 60; ++seed) {
    BooleanMatrix m = gen::gen_random_boolean(6 + seed % 5, 5 + seed % 7, 0.4, 7000 + seed);
    if (m.all_zero()) continue;
    auto w = rect::brilliant_scan(m, exact_left_factorization(m));
    CHECK(w.score >= w.threshold - 1e-6);
  }
}

TEST_CASE("projection zeroes the witness row and keeps reconstruction") {
  // u_r = (1,0), u_j = (1,1) projects to (0,1).
  BooleanMatrix m = BooleanMatrix::identity(2);
  Factorization f = make_factorization(RealMatrix::identity(2), RealMatrix::identity(2), m);
  rect::BrilliantWitness w{false, 0, 1.0, 1.0};
  auto out = rect::project_step(m, f, w);
  CHECK(out.deleted == 1);
  CHECK(out.kept == std::vector<int>{1});
  CHECK(out.matrix.rows() == 2);
  CHECK(out.matrix.cols() == 1);
  CHECK(!out.matrix.get(0, 0));
  CHECK(out.matrix.get(1, 0));
  CHECK(out.factorization.left.row_norm_squared(0) <= 1e-18);
  CHECK(out.factorization.reconstruction_error <= 1e-12);
  CHECK(out.frob_before - out.frob_after == doctest::Approx(1.0));
}

TEST_CASE("projection with an all-zero witness row deletes nothing") {
  BooleanMatrix m(2, 2);
  m.set(1, 1, true);
  RealMatrix u = RealMatrix::identity(2);
  Factorization f = make_factorization(u, m.to_real(), m);  // M = I * M
  rect::BrilliantWitness w{false, 0, 1.0, 0.0};
  auto out = rect::project_step(m, f, w);
  CHECK(out.deleted == 0);
  CHECK(out.matrix.cols() == 2);
  CHECK(out.matrix.rows() == 2);
  CHECK(out.factorization.left.row_norm_squared(0) <= 1e-18);
}

TEST_CASE("projection Frobenius bookkeeping") {
  // Case-1 steps must shed at least deleted / ||U||_row^2 of Frobenius mass.
  for (int seed = 0; seed < 15; ++seed) {
    BooleanMatrix m = gen::gen_random_boolean(7, 7, 0.35, 900 + seed);
    if (m.all_zero()) continue;
    Factorization f = exact_left_factorization(m);
    auto w = rect::brilliant_scan(m, f);
    if (w.is_column) continue;
    auto out = rect::project_step(m, f, w);
    const double row_bound = f.max_row_norm * f.max_row_norm;
    CHECK(out.frob_before - out.frob_after >=
          static_cast<double>(out.deleted) / row_bound - 1e-6);
  }
}

TEST_CASE("decrement certificate on I_8") {
  BooleanMatrix m = BooleanMatrix::identity(8);
  Factorization f = make_factorization(RealMatrix::identity(8), RealMatrix::identity(8), m);
  auto cert = rect::gamma2_decrement_step(m, f);
  CHECK(cert.upper_before == doctest::Approx(1.0));
  CHECK(cert.upper_after <= std::sqrt((1.0 - 0.25) * 1.0) + 1e-6);
  CHECK(cert.selection.extract(m).all_zero());
}

TEST_CASE("decrement certificate on a half-dense block matrix") {
  // Complement of diag(J_8, J_8): density exactly 1/2.
  BooleanMatrix m(16, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c)
      if ((r < 8) != (c < 8)) m.set(r, c, true);
  auto b = gamma2::gamma2_bracket(m, Budget::fast(), 0);
  auto cert = rect::gamma2_decrement_step(m, b.upper_witness);
  const double g = cert.upper_before;
  CHECK(cert.upper_after <= std::sqrt((g - 1.0 / (4.0 * g)) * g) + 1e-6);
  BooleanMatrix block = cert.selection.extract(m);
  CHECK(2 * block.ones() <= static_cast<long long>(block.rows()) * block.cols());
  CHECK(cert.factorization.reconstruction_error <= 1e-6);
}

TEST_CASE("decrement rejects dense input") {
  BooleanMatrix m = BooleanMatrix::all_ones(4, 4);
  Factorization f = make_factorization(RealMatrix(4, 1, 1.0), RealMatrix(1, 4, 1.0), m);
  CHECK_THROWS_AS(rect::gamma2_decrement_step(m, f), ContractViolation);
}

TEST_CASE("all-zeros search on the identity finds the off-diagonal block") {
  for (int n : {4, 5, 6, 7, 8, 12}) {
    auto r = rect::find_all_zeros_rectangle(BooleanMatrix::identity(n), Budget::fast());
    CHECK(r.selection.min_side() >= n / 2);
    CHECK(r.selection.extract(BooleanMatrix::identity(n)).all_zero());
  }
}

TEST_CASE("all-zeros search: gamma trace decreases strictly to zero") {
  BooleanMatrix m = gen::gen_random_boolean(24, 24, 0.35, 555);
  REQUIRE(2 * m.ones() <= 24 * 24);
  auto r = rect::find_all_zeros_rectangle(m, Budget::fast());
  for (std::size_t i = 1; i < r.gamma_trace.size(); ++i)
    CHECK(r.gamma_trace[i] < r.gamma_trace[i - 1] + 1e-6);
  if (!r.gamma_trace.empty()) CHECK(r.gamma_trace.back() == doctest::Approx(0.0));
}

TEST_CASE("all-zeros search on the all-zero matrix returns everything") {
  auto r = rect::find_all_zeros_rectangle(BooleanMatrix(4, 4), Budget::fast());
  CHECK(r.selection.height() == 4);
  CHECK(r.selection.width() == 4);
}

TEST_CASE("all-zeros search on a point-line incidence matrix") {
  BooleanMatrix m = gen::gen_point_line({3, 5, true});  // density 1/5
  auto r = rect::find_all_zeros_rectangle(m, Budget::fast());
  CHECK(r.selection.extract(m).all_zero());
  CHECK(r.selection.min_side() >= 1);
}

TEST_CASE("mono rectangle on flat fixtures") {
  auto ones = rect::find_mono_rectangle(BooleanMatrix::all_ones(5, 3), Budget::fast());
  CHECK(ones.color == 1);
  CHECK(ones.selection.height() == 5);
  CHECK(ones.selection.width() == 3);

  auto eye = rect::find_mono_rectangle(BooleanMatrix::identity(6), Budget::fast());
  CHECK(eye.color == 0);
  CHECK(eye.selection.min_side() >= 3);
}

TEST_CASE("mono rectangle stays within the exhaustive optimum") {
  for (int seed = 0; seed < 40; ++seed) {
    const int rows = 4 + seed % 9;
    const int cols = 4 + (seed * 3) % 9;
    const double dens = 0.1 + 0.2 * (seed % 5);
    BooleanMatrix m = gen::gen_random_boolean(rows, cols, dens, 2024 + seed);
    auto mono = rect::find_mono_rectangle(m, Budget::fast());
    const int oracle = oracles::max_mono_rectangle_side(m, mono.color == 1);
    CHECK(mono.selection.min_side() <= oracle);
    BooleanMatrix block = mono.selection.extract(m);
    CHECK((mono.color == 0 ? block.all_zero() : block.is_all_ones()));
  }
}

TEST_CASE("mono rectangle on the tight-example construction") {
  auto tight = gen::gen_tight_example({3, 100, 11});
  auto mono = rect::find_mono_rectangle(tight.matrix, Budget::fast());
  BooleanMatrix block = mono.selection.extract(tight.matrix);
  CHECK((mono.color == 0 ? block.all_zero() : block.is_all_ones()));
  // The construction forbids zero squares above 8 * 2^-ell * n.
  const double envelope = 8.0 * std::pow(2.0, -3.0) *
                          std::min(tight.matrix.rows(), tight.matrix.cols());
  if (mono.color == 0) CHECK(mono.selection.min_side() <= envelope + 1e-9);
}

TEST_CASE("trace-to-gamma submatrix certificates") {
  auto eye = rect::trace_to_gamma_submatrix(BooleanMatrix::identity(4).to_real(), 0.5);
  CHECK(eye.selection.height() == 2);
  CHECK(eye.selection.width() == 2);
  CHECK(eye.factorization.product_norm() <= 2.0 + 1e-6);

  auto ones = rect::trace_to_gamma_submatrix(RealMatrix(4, 4, 1.0), 0.25);
  CHECK(ones.selection.height() == 3);
  CHECK(ones.factorization.product_norm() <= 4.0 + 1e-6);

  // K_9 adjacency: trace norm 16, gamma = 16/9.
  RealMatrix k9(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (i != j) k9(i, j) = 1.0;
  auto r = rect::trace_to_gamma_submatrix(k9, 0.5);
  CHECK(r.selection.height() >= 5);
  CHECK(r.gamma == doctest::Approx(16.0 / 9.0).epsilon(1e-8));
  CHECK(r.factorization.product_norm() <= 2.0 * 16.0 / 9.0 + 1e-6);
  CHECK(r.factorization.reconstruction_error <= 1e-7);
}

TEST_CASE("constant submatrix of integer matrices") {
  auto flat = rect::constant_submatrix_integer(RealMatrix(3, 3, 2.0), Budget::fast());
  CHECK(flat.value == 2);
  CHECK(flat.selection.height() == 3);
  CHECK(flat.selection.width() == 3);

  RealMatrix diag(4, 4);
  diag(0, 0) = 1.0;
  diag(1, 1) = 1.0;
  auto zeros = rect::constant_submatrix_integer(diag, Budget::fast());
  CHECK(zeros.value == 0);
  for (int r : zeros.selection.row_indices)
    for (int c : zeros.selection.col_indices) CHECK(diag(r, c) == 0.0);

  // I_3 - 2(J - I_3): off-diagonal -2 entries dominate.
  RealMatrix mixed(3, 3, -2.0);
  for (int i = 0; i < 3; ++i) mixed(i, i) = 1.0;
  auto offdiag = rect::constant_submatrix_integer(mixed, Budget::fast());
  CHECK(offdiag.value == -2);
  CHECK(offdiag.selection.min_side() >= 1);
}

TEST_CASE("constant submatrix through the sparsify path") {
  // Majority value below half density forces the sparsifier to run first.
  CounterRng rng(404);
  RealMatrix m(12, 12);
  for (int r = 0; r < 12; ++r)
    for (int c = 0; c < 12; ++c) {
      const std::uint64_t roll = rng.below(10);
      m(r, c) = roll < 4 ? 0.0 : (roll < 7 ? 1.0 : 2.0);
    }
  auto found = rect::constant_submatrix_integer(m, Budget::fast());
  for (int r : found.selection.row_indices)
    for (int c : found.selection.col_indices)
      CHECK(std::llround(m(r, c)) == found.value);
}

TEST_CASE("greedy sweeps return verified rectangles") {
  BooleanMatrix m = gen::gen_random_boolean(12, 9, 0.5, 77);
  auto zero = rect::greedy_zero_rectangle(m);
  CHECK(zero.extract(m).all_zero());
  auto ones = rect::greedy_ones_rectangle(m);
  CHECK(ones.extract(m).is_all_ones());
  CHECK_THROWS_AS(rect::greedy_zero_rectangle(BooleanMatrix::all_ones(3, 3)), ContractViolation);
}
