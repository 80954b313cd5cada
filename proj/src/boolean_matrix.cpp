#include "matcut/boolean_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "matcut/errors.hpp"

namespace matcut {

BooleanMatrix::BooleanMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_((cols + 63) / 64),
      words_(static_cast<std::size_t>(rows) * ((cols + 63) / 64), 0),
      row_ones_(static_cast<std::size_t>(rows), 0),
      col_ones_(static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw ContractViolation("matrix dimensions must be nonnegative");
}

BooleanMatrix BooleanMatrix::all_ones(int rows, int cols) {
  BooleanMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, true);
  return m;
}

BooleanMatrix BooleanMatrix::identity(int n) {
  BooleanMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BooleanMatrix BooleanMatrix::from_real(const RealMatrix& m, double tol) {
  BooleanMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const double v = m(r, c);
      if (std::abs(v) <= tol) continue;
      if (std::abs(v - 1.0) <= tol) {
        out.set(r, c, true);
      } else {
        throw ContractViolation("from_real: entry is neither 0 nor 1 within tolerance");
      }
    }
  return out;
}

double BooleanMatrix::density() const {
  const long long cells = static_cast<long long>(rows_) * cols_;
  return cells == 0 ? 0.0 : static_cast<double>(ones_) / static_cast<double>(cells);
}

void BooleanMatrix::set(int r, int c, bool v) {
  const std::size_t w = word_index(r, c);
  const std::uint64_t mask = 1ULL << (c & 63);
  const bool cur = words_[w] & mask;
  if (cur == v) return;
  if (v) {
    words_[w] |= mask;
    ++row_ones_[static_cast<std::size_t>(r)];
    ++col_ones_[static_cast<std::size_t>(c)];
    ++ones_;
  } else {
    words_[w] &= ~mask;
    --row_ones_[static_cast<std::size_t>(r)];
    --col_ones_[static_cast<std::size_t>(c)];
    --ones_;
  }
}

int BooleanMatrix::row_intersection_ones(int r1, int r2) const {
  const std::uint64_t* a = &words_[static_cast<std::size_t>(r1) * words_per_row_];
  const std::uint64_t* b = &words_[static_cast<std::size_t>(r2) * words_per_row_];
  int total = 0;
  for (int w = 0; w < words_per_row_; ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

BooleanMatrix BooleanMatrix::complement() const {
  BooleanMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.set(r, c, !get(r, c));
  return out;
}

BooleanMatrix BooleanMatrix::transposed() const {
  BooleanMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(c, r, true);
  return out;
}

RealMatrix BooleanMatrix::to_real() const {
  RealMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) out(r, c) = 1.0;
  return out;
}

bool BooleanMatrix::operator==(const BooleanMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && words_ == other.words_;
}

SubmatrixSelection SubmatrixSelection::full(int rows, int cols) {
  SubmatrixSelection s;
  s.parent_rows = rows;
  s.parent_cols = cols;
  s.row_indices.resize(static_cast<std::size_t>(rows));
  s.col_indices.resize(static_cast<std::size_t>(cols));
  for (int i = 0; i < rows; ++i) s.row_indices[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < cols; ++j) s.col_indices[static_cast<std::size_t>(j)] = j;
  return s;
}

SubmatrixSelection SubmatrixSelection::make(std::vector<int> rows, std::vector<int> cols,
                                            int parent_rows, int parent_cols) {
  SubmatrixSelection s;
  s.row_indices = std::move(rows);
  s.col_indices = std::move(cols);
  s.parent_rows = parent_rows;
  s.parent_cols = parent_cols;
  std::sort(s.row_indices.begin(), s.row_indices.end());
  std::sort(s.col_indices.begin(), s.col_indices.end());
  s.validate();
  return s;
}

void SubmatrixSelection::validate() const {
  if (row_indices.empty() || col_indices.empty())
    throw ContractViolation("selection: index lists must be nonempty");
  auto check = [](const std::vector<int>& idx, int bound, const char* what) {
    int prev = -1;
    for (int v : idx) {
      if (v <= prev) throw ContractViolation(std::string("selection: ") + what + " not strictly increasing");
      if (v < 0 || v >= bound) throw ContractViolation(std::string("selection: ") + what + " out of range");
      prev = v;
    }
  };
  check(row_indices, parent_rows, "row indices");
  check(col_indices, parent_cols, "column indices");
}

BooleanMatrix SubmatrixSelection::extract(const BooleanMatrix& parent) const {
  if (parent.rows() != parent_rows || parent.cols() != parent_cols)
    throw ContractViolation("selection: parent dimensions do not match");
  BooleanMatrix out(height(), width());
  for (int i = 0; i < height(); ++i)
    for (int j = 0; j < width(); ++j)
      if (parent.get(row_indices[static_cast<std::size_t>(i)],
                     col_indices[static_cast<std::size_t>(j)]))
        out.set(i, j, true);
  return out;
}

SubmatrixSelection SubmatrixSelection::compose(const SubmatrixSelection& inner) const {
  if (inner.parent_rows != height() || inner.parent_cols != width())
    throw ContractViolation("selection: compose dimensions do not match");
  SubmatrixSelection out;
  out.parent_rows = parent_rows;
  out.parent_cols = parent_cols;
  out.row_indices.reserve(inner.row_indices.size());
  out.col_indices.reserve(inner.col_indices.size());
  for (int i : inner.row_indices) out.row_indices.push_back(row_indices[static_cast<std::size_t>(i)]);
  for (int j : inner.col_indices) out.col_indices.push_back(col_indices[static_cast<std::size_t>(j)]);
  out.validate();
  return out;
}

}  // namespace matcut
