#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace dimfree {

using Index = std::int64_t;

// Dense real matrix, row-major to match the on-disk layout.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
// Element of R^infinity: a column vector of any finite dimension.
using HVec = Eigen::VectorXd;

struct Shape {
  Index rows = 1;
  Index cols = 1;

  friend bool operator==(const Shape&, const Shape&) = default;
};

inline Shape shape_of(const Mat& A) { return {A.rows(), A.cols()}; }

inline std::string to_string(Shape s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

// Default absolute/relative tolerance for law checks and reductions.
inline constexpr double kDefaultTol = 1e-9;

// |x - y| <= atol + rtol * max(|x|, |y|), entrywise.
bool approx_equal(const Mat& A, const Mat& B, double atol = kDefaultTol,
                  double rtol = kDefaultTol);

bool all_finite(const Mat& A);
bool all_finite(const HVec& x);

}  // namespace dimfree
