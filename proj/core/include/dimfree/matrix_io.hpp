#pragma once

#include <string>
#include <string_view>

#include "dimfree/types.hpp"

namespace dimfree {

// Text format:
//   # optional comment lines
//   ROWS COLS        (or "N" / "N 1" for a vector)
//   row-major whitespace-separated decimals
struct MatrixFile {
  std::string path;
  Mat value;
  bool is_vector = false;
};

Mat parse_matrix(std::string_view text, bool* is_vector = nullptr);
MatrixFile read_matrix_file(const std::string& path);
Mat read_matrix(const std::string& path);

// 17 significant digits, so read(write(A)) == A bit for bit.
std::string format_double(double v);
std::string format_matrix(const Mat& A);
void write_matrix(const std::string& path, const Mat& A);

}  // namespace dimfree
