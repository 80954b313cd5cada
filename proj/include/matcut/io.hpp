#ifndef MATCUT_IO_HPP
#define MATCUT_IO_HPP

#include <optional>
#include <string>

#include "matcut/boolean_matrix.hpp"
#include "matcut/maxcut.hpp"
#include "matcut/real_matrix.hpp"

namespace matcut::io {

// Matrix text format: header "rows cols" (with an extra "kind=int" token for
// integer matrices), then one line per row; Boolean rows are plain 0/1
// strings, integer rows are space-separated.
struct MatrixFile {
  bool is_integer = false;
  BooleanMatrix boolean;  // valid when !is_integer
  RealMatrix integer;     // valid when is_integer; integral entries
};

std::string write_matrix(const BooleanMatrix& m);
std::string write_matrix_integer(const RealMatrix& m);
MatrixFile parse_matrix(const std::string& text);

// Graph format: header "n m", then m lines "a b" with 0-based ids. Duplicate
// or mirrored edges are dropped on read; *had_duplicates reports it.
std::string write_graph(const mc::Graph& g);
mc::Graph parse_graph(const std::string& text, bool* had_duplicates = nullptr);

// Selection format: "rows i j k...", "cols ...", then metadata lines.
std::string write_selection(const SubmatrixSelection& sel, int color, bool verified);
SubmatrixSelection parse_selection(const std::string& text, int* color = nullptr);

std::string read_file(const std::string& path);
// Temp-and-rename so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

// Resolves a path against MATCUT_DATA_DIR when it does not exist as given.
std::string resolve_input_path(const std::string& path);

}  // namespace matcut::io

#endif
