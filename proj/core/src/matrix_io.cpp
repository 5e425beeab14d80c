#include "dimfree/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "dimfree/errors.hpp"
#include "dimfree/lattice.hpp"

namespace dimfree {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize_line(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), lineno, start + 1});
  }
  return out;
}

[[noreturn]] void fail(const Token& t, const std::string& what) {
  throw ParseError("line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                       ": " + what + " '" + std::string(t.text) + "'",
                   t.column);
}

Index parse_dim(const Token& t) {
  Index v = 0;
  const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size() || v < 1) {
    fail(t, "expected a positive dimension, got");
  }
  return v;
}

double parse_value(const Token& t) {
  std::string_view s = t.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) fail(t, "expected a number, got");
  if (!std::isfinite(v)) fail(t, "non-finite entry");
  return v;
}

}  // namespace

Mat parse_matrix(std::string_view text, bool* is_vector) {
  std::vector<Token> header;
  std::vector<Token> values;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    auto toks = tokenize_line(line, lineno);
    if (header.empty()) header = std::move(toks);
    else values.insert(values.end(), toks.begin(), toks.end());
  }
  if (header.empty()) throw ParseError("missing shape line", 0);
  if (header.size() > 2) fail(header[2], "shape line has extra token");

  const Index rows = parse_dim(header[0]);
  const Index cols = header.size() == 2 ? parse_dim(header[1]) : 1;
  if (is_vector) *is_vector = cols == 1;
  const auto expected = static_cast<std::size_t>(checked_mul(rows, cols));
  if (values.size() < expected) {
    throw ParseError("expected " + std::to_string(expected) + " entries for shape " +
                         std::to_string(rows) + "x" + std::to_string(cols) + ", found " +
                         std::to_string(values.size()),
                     0);
  }
  if (values.size() > expected) fail(values[expected], "unexpected extra entry");

  Mat A(rows, cols);
  for (std::size_t i = 0; i < expected; ++i) A.data()[i] = parse_value(values[i]);
  return A;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open matrix file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  MatrixFile f;
  f.path = path;
  try {
    f.value = parse_matrix(ss.str(), &f.is_vector);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.column());
  }
  return f;
}

Mat read_matrix(const std::string& path) { return read_matrix_file(path).value; }

std::string format_double(double v) {
  char buf[32];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf, p);
}

std::string format_matrix(const Mat& A) {
  std::ostringstream os;
  os << A.rows() << ' ' << A.cols() << '\n';
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < A.cols(); ++j) os << (j ? " " : "") << format_double(A(i, j));
    os << '\n';
  }
  return os.str();
}

void write_matrix(const std::string& path, const Mat& A) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write matrix file '" + path + "'");
  out << format_matrix(A);
}

}  // namespace dimfree
