#ifndef MATCUT_BOOLEAN_MATRIX_HPP
#define MATCUT_BOOLEAN_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "matcut/real_matrix.hpp"

namespace matcut {

// Dense 0/1 matrix backed by per-row 64-bit words, with cached row/column
// one-counts and the total. The caches are maintained by set().
class BooleanMatrix {
 public:
  BooleanMatrix() = default;
  BooleanMatrix(int rows, int cols);

  static BooleanMatrix all_ones(int rows, int cols);
  static BooleanMatrix identity(int n);
  static BooleanMatrix from_real(const RealMatrix& m, double tol = 1e-9);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long ones() const { return ones_; }
  double density() const;

  bool get(int r, int c) const {
    return (words_[word_index(r, c)] >> (c & 63)) & 1u;
  }
  void set(int r, int c, bool v);

  int row_ones(int r) const { return row_ones_[static_cast<std::size_t>(r)]; }
  int col_ones(int c) const { return col_ones_[static_cast<std::size_t>(c)]; }
  const std::vector<int>& row_ones_all() const { return row_ones_; }
  const std::vector<int>& col_ones_all() const { return col_ones_; }

  bool all_zero() const { return ones_ == 0; }
  bool is_all_ones() const { return ones_ == static_cast<long long>(rows_) * cols_; }

  int row_intersection_ones(int r1, int r2) const;

  BooleanMatrix complement() const;
  BooleanMatrix transposed() const;
  RealMatrix to_real() const;

  bool operator==(const BooleanMatrix& other) const;

 private:
  std::size_t word_index(int r, int c) const {
    return static_cast<std::size_t>(r) * words_per_row_ + (c >> 6);
  }

  int rows_ = 0;
  int cols_ = 0;
  int words_per_row_ = 0;
  long long ones_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<int> row_ones_;
  std::vector<int> col_ones_;
};

// Ordered row/column index subsets identifying a submatrix of a parent
// matrix. Indices are strictly increasing and nonempty.
struct SubmatrixSelection {
  std::vector<int> row_indices;
  std::vector<int> col_indices;
  int parent_rows = 0;
  int parent_cols = 0;

  static SubmatrixSelection full(int rows, int cols);
  static SubmatrixSelection make(std::vector<int> rows, std::vector<int> cols,
                                 int parent_rows, int parent_cols);

  int height() const { return static_cast<int>(row_indices.size()); }
  int width() const { return static_cast<int>(col_indices.size()); }
  int min_side() const { return height() < width() ? height() : width(); }
  long long area() const { return static_cast<long long>(height()) * width(); }

  void validate() const;  // throws ContractViolation on broken invariants
  BooleanMatrix extract(const BooleanMatrix& parent) const;

  // `inner` indexes into this selection's extracted matrix; the result
  // indexes straight into this selection's parent.
  SubmatrixSelection compose(const SubmatrixSelection& inner) const;
};

// Thrown when an iterative guard fires; carries the best selection found.
class PartialResult : public std::runtime_error {
 public:
  PartialResult(const std::string& what, SubmatrixSelection best)
      : std::runtime_error(what), best_selection(std::move(best)) {}
  SubmatrixSelection best_selection;
};

}  // namespace matcut

#endif
