#include "matcut/io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "matcut/errors.hpp"

namespace matcut::io {

namespace {

struct LineReader {
  const std::string& text;
  std::size_t pos = 0;
  int line_no = 0;

  std::optional<std::string> next() {
    if (pos >= text.size()) return std::nullopt;
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }
};

long long parse_int_token(const std::string& token, int line, int column) {
  long long value = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size())
    throw ParseError("malformed integer '" + token + "'", line, column);
  return value;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::string write_matrix(const BooleanMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out += m.get(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string write_matrix_integer(const RealMatrix& m) {
  std::string out =
      std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " kind=int\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(std::llround(m(r, c)));
    }
    out += '\n';
  }
  return out;
}

MatrixFile parse_matrix(const std::string& text) {
  LineReader reader{text};
  const auto header = reader.next();
  if (!header) throw ParseError("matrix: empty file", 1, 1);
  std::vector<std::string> tokens = split_ws(*header);
  if (tokens.size() < 2) throw ParseError("matrix: header needs 'rows cols'", 1, 1);
  const long long rows = parse_int_token(tokens[0], 1, 1);
  const long long cols = parse_int_token(tokens[1], 1, 2);
  if (rows < 0 || cols < 0 || rows > 100000 || cols > 100000)
    throw ParseError("matrix: dimensions out of range", 1, 1);
  bool is_int = false;
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    if (tokens[i] == "kind=int") is_int = true;
    else throw ParseError("matrix: unknown header token '" + tokens[i] + "'", 1, static_cast<int>(i + 1));
  }

  MatrixFile out;
  out.is_integer = is_int;
  if (is_int) {
    out.integer = RealMatrix(static_cast<int>(rows), static_cast<int>(cols));
    for (int r = 0; r < rows; ++r) {
      const auto line = reader.next();
      if (!line) throw ParseError("matrix: missing row", reader.line_no + 1, 1);
      const std::vector<std::string> vals = split_ws(*line);
      if (static_cast<long long>(vals.size()) != cols)
        throw ParseError("matrix: expected " + std::to_string(cols) + " entries", reader.line_no, 1);
      for (int c = 0; c < cols; ++c)
        out.integer(r, c) =
            static_cast<double>(parse_int_token(vals[static_cast<std::size_t>(c)], reader.line_no, c + 1));
    }
  } else {
    out.boolean = BooleanMatrix(static_cast<int>(rows), static_cast<int>(cols));
    for (int r = 0; r < rows; ++r) {
      const auto line = reader.next();
      if (!line) throw ParseError("matrix: missing row", reader.line_no + 1, 1);
      if (static_cast<long long>(line->size()) != cols)
        throw ParseError("matrix: row must have exactly " + std::to_string(cols) + " characters",
                         reader.line_no, 1);
      for (int c = 0; c < cols; ++c) {
        const char ch = (*line)[static_cast<std::size_t>(c)];
        if (ch == '1') out.boolean.set(r, c, true);
        else if (ch != '0') throw ParseError("matrix: entries must be 0 or 1", reader.line_no, c + 1);
      }
    }
  }
  while (const auto line = reader.next())
    if (!line->empty()) throw ParseError("matrix: trailing content", reader.line_no, 1);
  return out;
}

std::string write_graph(const mc::Graph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
  for (const auto& [a, b] : g.edges)
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

mc::Graph parse_graph(const std::string& text, bool* had_duplicates) {
  LineReader reader{text};
  const auto header = reader.next();
  if (!header) throw ParseError("graph: empty file", 1, 1);
  const std::vector<std::string> tokens = split_ws(*header);
  if (tokens.size() != 2) throw ParseError("graph: header needs 'n m'", 1, 1);
  const long long n = parse_int_token(tokens[0], 1, 1);
  const long long m = parse_int_token(tokens[1], 1, 2);
  if (n < 0 || n > 1000000 || m < 0) throw ParseError("graph: sizes out of range", 1, 1);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const auto line = reader.next();
    if (!line) throw ParseError("graph: missing edge line", reader.line_no + 1, 1);
    const std::vector<std::string> parts = split_ws(*line);
    if (parts.size() != 2) throw ParseError("graph: edge line needs 'a b'", reader.line_no, 1);
    const long long a = parse_int_token(parts[0], reader.line_no, 1);
    const long long b = parse_int_token(parts[1], reader.line_no, 2);
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError("graph: endpoint out of range", reader.line_no, 1);
    if (a == b) throw ParseError("graph: self-loop", reader.line_no, 1);
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  while (const auto line = reader.next())
    if (!line->empty()) throw ParseError("graph: trailing content", reader.line_no, 1);
  return mc::Graph::from_edges(static_cast<int>(n), std::move(edges), had_duplicates);
}

std::string write_selection(const SubmatrixSelection& sel, int color, bool verified) {
  std::string out = "rows";
  for (int r : sel.row_indices) out += " " + std::to_string(r);
  out += "\ncols";
  for (int c : sel.col_indices) out += " " + std::to_string(c);
  out += "\nparent " + std::to_string(sel.parent_rows) + " " + std::to_string(sel.parent_cols);
  out += "\ncolor " + std::to_string(color);
  out += "\nside " + std::to_string(sel.min_side());
  out += "\nverified " + std::string(verified ? "1" : "0") + "\n";
  return out;
}

SubmatrixSelection parse_selection(const std::string& text, int* color) {
  LineReader reader{text};
  SubmatrixSelection sel;
  while (const auto line = reader.next()) {
    if (line->empty()) continue;
    const std::vector<std::string> tokens = split_ws(*line);
    if (tokens[0] == "rows") {
      for (std::size_t i = 1; i < tokens.size(); ++i)
        sel.row_indices.push_back(static_cast<int>(parse_int_token(tokens[i], reader.line_no, static_cast<int>(i))));
    } else if (tokens[0] == "cols") {
      for (std::size_t i = 1; i < tokens.size(); ++i)
        sel.col_indices.push_back(static_cast<int>(parse_int_token(tokens[i], reader.line_no, static_cast<int>(i))));
    } else if (tokens[0] == "parent" && tokens.size() == 3) {
      sel.parent_rows = static_cast<int>(parse_int_token(tokens[1], reader.line_no, 2));
      sel.parent_cols = static_cast<int>(parse_int_token(tokens[2], reader.line_no, 3));
    } else if (tokens[0] == "color" && tokens.size() == 2 && color) {
      *color = static_cast<int>(parse_int_token(tokens[1], reader.line_no, 2));
    }
  }
  sel.validate();
  return sel;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw NumericalError("cannot open temp file '" + tmp + "' for writing");
    out << content;
    out.flush();
    if (!out) throw NumericalError("write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw NumericalError("atomic rename to '" + path + "' failed: " + ec.message());
}

std::string resolve_input_path(const std::string& path) {
  if (std::filesystem::exists(path)) return path;
  if (const char* dir = std::getenv("MATCUT_DATA_DIR")) {
    const std::filesystem::path candidate = std::filesystem::path(dir) / path;
    if (std::filesystem::exists(candidate)) return candidate.string();
  }
  return path;
}

}  // namespace matcut::io
