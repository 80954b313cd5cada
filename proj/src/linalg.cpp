#include "matcut/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "matcut/errors.hpp"

namespace matcut::linalg {

namespace {

double off_diagonal_mass(const RealMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (r != c) s += a(r, c) * a(r, c);
  return std::sqrt(s);
}

// Sorts (value, index) pairs descending by value, ties by original index.
std::vector<int> descending_order(const std::vector<double>& values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return values[i] > values[j]; });
  return order;
}

}  // namespace

RealMatrix SpectralData::reconstruct() const {
  const int n = eigenvectors.rows();
  RealMatrix scaled = eigenvectors;
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) scaled(r, c) *= eigenvalues[static_cast<std::size_t>(c)];
  return scaled.multiplied_by(eigenvectors.transposed());
}

RealMatrix SvdData::reconstruct() const {
  RealMatrix scaled = left;
  for (int c = 0; c < left.cols(); ++c)
    for (int r = 0; r < left.rows(); ++r) scaled(r, c) *= singular_values[static_cast<std::size_t>(c)];
  return scaled.multiplied_by(right);
}

SpectralData sym_eigen(const RealMatrix& input) {
  if (input.rows() != input.cols())
    throw ContractViolation("sym_eigen: matrix must be square");
  if (!input.is_finite()) throw ContractViolation("sym_eigen: entries must be finite");
  if (!input.is_symmetric(1e-10))
    throw ContractViolation("sym_eigen: matrix must be symmetric within 1e-10");

  const int n = input.rows();
  RealMatrix a = input;
  // Symmetrize exactly so rotations preserve symmetry bit for bit.
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) {
      const double v = 0.5 * (a(r, c) + a(c, r));
      a(r, c) = v;
      a(c, r) = v;
    }
  RealMatrix q = RealMatrix::identity(n);

  const double target = 1e-12 * a.frobenius_norm();
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps && off_diagonal_mass(a) > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (apr == 0.0) continue;
        const double tau = (a(r, r) - a(p, p)) / (2.0 * apr);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double ark = a(r, k);
          a(p, k) = c * apk - s * ark;
          a(r, k) = s * apk + c * ark;
        }
        for (int k = 0; k < n; ++k) {
          const double qkp = q(k, p);
          const double qkr = q(k, r);
          q(k, p) = c * qkp - s * qkr;
          q(k, r) = s * qkp + c * qkr;
        }
      }
    }
  }

  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a(i, i);
  const std::vector<int> order = descending_order(values);

  SpectralData out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors = RealMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(order[i])];
    for (int k = 0; k < n; ++k) out.eigenvectors(k, i) = q(k, order[i]);
  }
  return out;
}

namespace {

// One-sided Jacobi on a matrix with rows >= cols: orthogonalizes column pairs,
// accumulating the rotations in v. On exit b = U * diag(sigma), b_input = U
// diag(sigma) v^T. Internally the transposes are rotated so every inner loop
// runs over contiguous memory; column norms are cached and refreshed per
// sweep so each pair costs a single inner product.
void one_sided_jacobi(RealMatrix& b, RealMatrix& v) {
  const int n = b.cols();
  const int m = b.rows();
  RealMatrix bt = b.transposed();          // columns of b as contiguous rows
  RealMatrix vt = RealMatrix::identity(n);
  std::vector<double> norm_sq(static_cast<std::size_t>(n));
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (int i = 0; i < n; ++i) norm_sq[static_cast<std::size_t>(i)] = bt.row_norm_squared(i);
    bool rotated = false;
    for (int i = 0; i < n - 1; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double alpha = norm_sq[static_cast<std::size_t>(i)];
        const double beta = norm_sq[static_cast<std::size_t>(j)];
        double* bi = &bt.data()[static_cast<std::size_t>(i) * m];
        double* bj = &bt.data()[static_cast<std::size_t>(j) * m];
        double gamma = 0.0;
        for (int k = 0; k < m; ++k) gamma += bi[k] * bj[k];
        if (std::abs(gamma) <= 1e-14 * std::sqrt(alpha * beta) || gamma == 0.0) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int k = 0; k < m; ++k) {
          const double x = bi[k];
          const double y = bj[k];
          bi[k] = c * x - s * y;
          bj[k] = s * x + c * y;
        }
        double* vi = &vt.data()[static_cast<std::size_t>(i) * n];
        double* vj = &vt.data()[static_cast<std::size_t>(j) * n];
        for (int k = 0; k < n; ++k) {
          const double x = vi[k];
          const double y = vj[k];
          vi[k] = c * x - s * y;
          vj[k] = s * x + c * y;
        }
        // Exact rotation updates of the cached norms.
        norm_sq[static_cast<std::size_t>(i)] = alpha - t * gamma;
        norm_sq[static_cast<std::size_t>(j)] = beta + t * gamma;
      }
    }
    if (!rotated) break;
  }
  b = bt.transposed();
  v = vt.transposed();
}

// Fills columns of u whose singular value vanished with an orthonormal
// completion, scanning the standard basis deterministically.
void complete_orthonormal_columns(RealMatrix& u, const std::vector<bool>& needs_fill) {
  const int m = u.rows();
  const int k = u.cols();
  int basis = 0;
  for (int c = 0; c < k; ++c) {
    if (!needs_fill[static_cast<std::size_t>(c)]) continue;
    while (basis < m) {
      std::vector<double> cand(static_cast<std::size_t>(m), 0.0);
      cand[static_cast<std::size_t>(basis)] = 1.0;
      ++basis;
      for (int c2 = 0; c2 < k; ++c2) {
        if (needs_fill[static_cast<std::size_t>(c2)] && c2 >= c) continue;
        double dot = 0.0;
        for (int r = 0; r < m; ++r) dot += cand[static_cast<std::size_t>(r)] * u(r, c2);
        for (int r = 0; r < m; ++r) cand[static_cast<std::size_t>(r)] -= dot * u(r, c2);
      }
      double norm = 0.0;
      for (double x : cand) norm += x * x;
      norm = std::sqrt(norm);
      if (norm > 0.5) {
        for (int r = 0; r < m; ++r) u(r, c) = cand[static_cast<std::size_t>(r)] / norm;
        break;
      }
    }
  }
}

SvdData svd_tall(const RealMatrix& m) {
  RealMatrix b = m;
  RealMatrix v;
  one_sided_jacobi(b, v);

  const int rows = m.rows();
  const int k = m.cols();
  std::vector<double> sigma(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    sigma[static_cast<std::size_t>(c)] = std::sqrt(b.col_norm_squared(c));

  const std::vector<int> order = descending_order(sigma);
  SvdData out;
  out.singular_values.resize(static_cast<std::size_t>(k));
  out.left = RealMatrix(rows, k);
  RealMatrix v_sorted(k, k);
  std::vector<bool> needs_fill(static_cast<std::size_t>(k), false);
  const double sigma_max = sigma[static_cast<std::size_t>(order[0])];
  for (int c = 0; c < k; ++c) {
    const int src = order[c];
    const double s = sigma[static_cast<std::size_t>(src)];
    out.singular_values[static_cast<std::size_t>(c)] = s;
    // Columns below the noise floor get an orthonormal completion instead of
    // a division by a vanishing norm.
    if (s > sigma_max * 1e-13 && s > 0.0) {
      for (int r = 0; r < rows; ++r) out.left(r, c) = b(r, src) / s;
    } else {
      needs_fill[static_cast<std::size_t>(c)] = true;
    }
    for (int r = 0; r < k; ++r) v_sorted(r, c) = v(r, src);
  }
  complete_orthonormal_columns(out.left, needs_fill);
  out.right = v_sorted.transposed();
  return out;
}

}  // namespace

SvdData svd(const RealMatrix& m) {
  if (!m.is_finite()) throw ContractViolation("svd: entries must be finite");
  if (m.rows() == 0 || m.cols() == 0) throw ContractViolation("svd: matrix must be nonempty");
  if (m.rows() >= m.cols()) return svd_tall(m);
  // M = (V sigma U^T)^T for the transpose's factors.
  SvdData t = svd_tall(m.transposed());
  SvdData out;
  out.singular_values = t.singular_values;
  out.left = t.right.transposed();
  out.right = t.left.transposed();
  return out;
}

double trace_norm(const SvdData& s) {
  double total = 0.0;
  for (double v : s.singular_values) total += v;
  return total;
}

double trace_norm(const RealMatrix& m) { return trace_norm(svd(m)); }

int numerical_rank(const SvdData& s, int rows, int cols) {
  if (s.singular_values.empty()) return 0;
  const double tol = std::max(rows, cols) * s.singular_values.front() * 1e-12;
  int r = 0;
  for (double v : s.singular_values)
    if (v > tol) ++r;
  return r;
}

}  // namespace matcut::linalg
