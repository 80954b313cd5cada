// Brute-force reference implementations, independent of the library's own
// search paths. Everything here enumerates.
#ifndef MATCUT_TESTS_ORACLES_HPP
#define MATCUT_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "matcut/boolean_matrix.hpp"
#include "matcut/maxcut.hpp"

namespace oracles {

using matcut::BooleanMatrix;

// Largest side of a monochromatic rectangle of the given color: enumerates
// every subset of the smaller dimension. Requires min(rows, cols) <= 16.
inline int max_mono_rectangle_side(const BooleanMatrix& m, bool color) {
  const bool transpose = m.rows() > m.cols();
  const BooleanMatrix w = transpose ? m.transposed() : m;
  const int rows = w.rows();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << rows); ++mask) {
    const int a = std::popcount(mask);
    int good_cols = 0;
    for (int c = 0; c < w.cols(); ++c) {
      bool ok = true;
      for (int r = 0; r < rows && ok; ++r)
        if ((mask & (1u << r)) && w.get(r, c) != color) ok = false;
      if (ok) ++good_cols;
    }
    best = std::max(best, std::min(a, good_cols));
  }
  return best;
}

// Discrepancy by enumerating every (A, B) pair; dimensions must stay tiny.
inline double disc_full_enumeration(const BooleanMatrix& m) {
  const double p = m.density();
  double best = 0.0;
  for (std::uint32_t am = 1; am < (1u << m.rows()); ++am)
    for (std::uint32_t bm = 1; bm < (1u << m.cols()); ++bm) {
      long long ones = 0;
      long long cells = 0;
      for (int r = 0; r < m.rows(); ++r) {
        if (!(am & (1u << r))) continue;
        for (int c = 0; c < m.cols(); ++c) {
          if (!(bm & (1u << c))) continue;
          ++cells;
          if (m.get(r, c)) ++ones;
        }
      }
      best = std::max(best, std::abs(static_cast<double>(ones) -
                                     p * static_cast<double>(cells)));
    }
  return best;
}

// Maximum clique size by subset enumeration; n <= 20 or so.
inline int max_clique_size(const BooleanMatrix& adjacency) {
  const int n = adjacency.rows();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool clique = true;
    for (int i = 0; i < n && clique; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = i + 1; j < n && clique; ++j)
        if ((mask & (1u << j)) && !adjacency.get(i, j)) clique = false;
    }
    if (clique) best = size;
  }
  return best;
}

// MaxCut by naive per-mask edge counting; independent of the gray-code path.
inline long long maxcut_naive(const matcut::mc::Graph& g) {
  long long best = 0;
  for (std::uint32_t mask = 0; mask < (1u << (g.n > 0 ? g.n - 1 : 0)); ++mask) {
    long long cut = 0;
    for (const auto& [a, b] : g.edges) {
      const bool sa = a > 0 && (mask & (1u << (a - 1)));
      const bool sb = b > 0 && (mask & (1u << (b - 1)));
      if (sa != sb) ++cut;
    }
    best = std::max(best, cut);
  }
  return best;
}

}  // namespace oracles

#endif
