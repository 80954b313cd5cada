#include <doctest.h>

#include <cmath>

#include "matcut/boolean_matrix.hpp"
#include "matcut/errors.hpp"
#include "matcut/factorization.hpp"

using namespace matcut;

TEST_CASE("count caches track set/unset") {
  BooleanMatrix m(3, 4);
  m.set(0, 0, true);
  m.set(2, 3, true);
  m.set(2, 3, true);  // idempotent
  CHECK(m.ones() == 2);
  CHECK(m.row_ones(2) == 1);
  CHECK(m.col_ones(3) == 1);
  m.set(2, 3, false);
  CHECK(m.ones() == 1);
  CHECK(m.col_ones(3) == 0);
  CHECK(m.density() == doctest::Approx(1.0 / 12.0));
}

TEST_CASE("row intersection uses the packed words") {
  BooleanMatrix m(2, 130);  // spans three words per row
  m.set(0, 0, true);
  m.set(0, 129, true);
  m.set(1, 129, true);
  m.set(1, 64, true);
  CHECK(m.row_intersection_ones(0, 1) == 1);
}

TEST_CASE("complement and transpose") {
  BooleanMatrix m = BooleanMatrix::identity(3);
  CHECK(m.complement().ones() == 6);
  BooleanMatrix r(2, 3);
  r.set(0, 2, true);
  CHECK(r.transposed().get(2, 0));
  CHECK(r.transposed().rows() == 3);
}

TEST_CASE("selection invariants") {
  CHECK_THROWS_AS(SubmatrixSelection::make({}, {0}, 2, 2), ContractViolation);
  CHECK_THROWS_AS(SubmatrixSelection::make({0, 0}, {0}, 2, 2), ContractViolation);
  CHECK_THROWS_AS(SubmatrixSelection::make({0, 2}, {0}, 2, 2), ContractViolation);
  SubmatrixSelection s = SubmatrixSelection::make({1, 0}, {1}, 2, 2);  // sorts
  CHECK(s.row_indices == std::vector<int>{0, 1});
}

TEST_CASE("selection extract and compose") {
  BooleanMatrix m = BooleanMatrix::identity(4);
  SubmatrixSelection outer = SubmatrixSelection::make({0, 2, 3}, {1, 2, 3}, 4, 4);
  BooleanMatrix sub = outer.extract(m);
  CHECK(sub.rows() == 3);
  CHECK(sub.get(1, 1));  // m(2,2)
  SubmatrixSelection inner = SubmatrixSelection::make({1}, {1, 2}, 3, 3);
  SubmatrixSelection composed = outer.compose(inner);
  CHECK(composed.row_indices == std::vector<int>{2});
  CHECK(composed.col_indices == std::vector<int>{2, 3});
  CHECK(composed.extract(m).get(0, 0));
}

TEST_CASE("factorization caches and rebalancing") {
  BooleanMatrix m = BooleanMatrix::all_ones(2, 2);
  RealMatrix u(2, 1, 2.0), v(1, 2, 0.5);
  Factorization f = make_factorization(u, v, m);
  CHECK(f.reconstruction_error == 0.0);
  CHECK(f.max_row_norm == doctest::Approx(2.0));
  CHECK(f.max_col_norm == doctest::Approx(0.5));
  const double before = f.product_norm();
  rebalance(f);
  CHECK(f.product_norm() == doctest::Approx(before));
  CHECK(f.max_row_norm == doctest::Approx(f.max_col_norm));
  CHECK(max_abs_diff(f.product(), m.to_real()) <= 1e-12);
}

TEST_CASE("combine_sum certifies the sum within the subadditivity bound") {
  // I_3 + (J - I_3) = J; parts have products 1 and sqrt(2).
  BooleanMatrix eye = BooleanMatrix::identity(3);
  BooleanMatrix off = eye.complement();
  Factorization fa = make_factorization(eye.to_real(), RealMatrix::identity(3), eye);
  Factorization fb = make_factorization(off.to_real(), RealMatrix::identity(3), off);
  RealMatrix target(3, 3, 1.0);
  Factorization sum = combine_sum(fa, fb, target);
  CHECK(sum.reconstruction_error <= 1e-12);
  const double pa = fa.product_norm();
  const double pb = fb.product_norm();
  CHECK(sum.product_norm() <= pa + pb + 1e-9);
  CHECK(sum.product_norm() == doctest::Approx(pa + pb).epsilon(1e-9));
}

TEST_CASE("complement factorization certifies J - M") {
  BooleanMatrix m = BooleanMatrix::identity(4);
  Factorization f = make_factorization(m.to_real(), RealMatrix::identity(4), m);
  BooleanMatrix comp = m.complement();
  Factorization fc = complement_factorization(f, comp);
  CHECK(fc.reconstruction_error <= 1e-12);
  CHECK(fc.product_norm() <= 1.0 + f.product_norm() + 1e-9);
}
