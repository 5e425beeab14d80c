#pragma once

#include <complex>
#include <vector>

#include "dimfree/poly.hpp"
#include "dimfree/types.hpp"

namespace dimfree {

// A ⊗ E_{t/m×t/n}, t = lcm(m, n).
Mat box(const Mat& A);

enum class SymAltMode { Symmetrize, Alternate };
// ½(A ±̂ Aᵀ), a t×t matrix.
Mat sym_alt(const Mat& A, SymAltMode mode);

enum class SymSkew { Symmetric, Skew };
bool is_sym_skew(const Mat& A, SymSkew mode, double tol = kDefaultTol);

// det(λI_t − box(A)), degree t.
Poly s_char_poly(const Mat& A);

struct SEigenPair {
  std::complex<double> value;
  Eigen::VectorXcd vector;
};

// Throws NumericError when the eigensolver does not converge.
std::vector<SEigenPair> s_spectrum(const Mat& A);

double box_trace(const Mat& A);

}  // namespace dimfree
