#pragma once

#include <vector>

#include "dimfree/poly.hpp"
#include "dimfree/types.hpp"

namespace dimfree {

// a·I_{m×n} + A₀. I_{m×n} is formal; it only acts through the ring rules.
struct ExtMat {
  double scalar = 0.0;
  Mat body;

  Shape shape() const { return shape_of(body); }
  static ExtMat identity(Shape s);
  static ExtMat pure(const Mat& A0) { return {0.0, A0}; }
  // Concrete matrix a·I + A₀; square shapes only.
  Mat to_matrix() const;
};

// Π_A = A·Psi_{n×m}, m×m.
Mat restricted_form(const Mat& A, bool weighted = true);

enum class BracketKind { Dk, Pseudo };
// Dk: A⊸B − B⊸A (same shapes). Pseudo: A⊸̂B −̂ B⊸̂A (always E-weighted).
Mat bracket(const Mat& A, const Mat& B, BracketKind kind, bool weighted = true);

// Monic degree-m characteristic polynomial of Π_A.
Poly char_poly(const Mat& A, bool weighted = true);
// Same relation but of degree min(m, n): for n < m uses Psi·A (n×n), which
// shares the nonzero spectrum of Π_A and also annihilates A.
Poly reduced_char_poly(const Mat& A, bool weighted = true);

// k = 0: identity ExtMat. k >= 1: (0, A^{<k>}).
ExtMat dk_power(const Mat& A, Index k, bool weighted = true);
Mat dk_power_mat(const Mat& A, Index k, bool weighted = true);

// Σ_j q_j A^{<j+1>} for p(x) = Σ q_j x^j; zero for a Cayley–Hamilton poly.
Mat ch_residual(const Mat& A, const Poly& p, bool weighted = true);

enum class ExtOp { Add, Mul };
ExtMat ext_ops(const ExtMat& X, const ExtMat& Y, ExtOp op, bool weighted = true);
inline ExtMat ext_add(const ExtMat& X, const ExtMat& Y) { return ext_ops(X, Y, ExtOp::Add); }
inline ExtMat ext_mul(const ExtMat& X, const ExtMat& Y, bool weighted = true) {
  return ext_ops(X, Y, ExtOp::Mul, weighted);
}

enum class InvertMethod { ClosedForm, LinearSolve };

// Closed-form inverse data for I + A₀: B₀ = Σ x_i A₀^{<i>}.
struct InverseCoefficients {
  Poly poly;               // the polynomial used (reduced degree)
  std::vector<double> x;   // x_1..x_d stored at x[0..d-1]
  double criterion;        // c_d − c_{d−1} + ... ± c_1 − 1; must be nonzero
};
InverseCoefficients inverse_coefficients(const Mat& A0, bool weighted = true);

// Throws NotInvertible (carrying the criterion) or DomainError for a zero scalar.
ExtMat ext_invert(const ExtMat& X, InvertMethod method = InvertMethod::ClosedForm,
                  bool weighted = true);

inline constexpr int kSeriesMaxTerms = 200;
inline constexpr double kSeriesTol = 1e-16;

ExtMat ext_exp(const Mat& B, bool weighted = true, int max_terms = kSeriesMaxTerms,
               double tol = kSeriesTol);
// Requires scalar 1 and spectral radius of Π_body below 1.
Mat ext_log(const ExtMat& X, bool weighted = true, int max_terms = kSeriesMaxTerms,
            double tol = kSeriesTol);

enum class Ideal { Q, Z };
bool ideal_member(const Mat& A, Ideal which, bool weighted = true, double tol = kDefaultTol);
std::vector<Mat> z_basis(Index m, Index n, bool weighted = true);

// ‖A⊸̂M +̂ M⊸̂Aᵀ‖_∞ <= tol.
bool gm_member(const Mat& A, const Mat& M, double tol = kDefaultTol);
// box(A⊸̂M) = −box(M⊸̂Aᵀ) up to inflation to a common size.
bool gm_member_boxed(const Mat& A, const Mat& M, double tol = kDefaultTol);

// (aI+A₀) ⊛ (bI+B₀) = ab·I_{s×t} + b·A₀⊗E + a·B₀⊗E + A₀⊸̂B₀.
ExtMat hyper_gl_mul(const ExtMat& X, const ExtMat& Y);

// Diagnostic only, no group semantics: with p the degree-m char poly of Π_A
// and c₀ != 0, identity = I^A (A⊸I^A = I^A⊸A = A) and inverse satisfies
// A⊸inverse = I^A. Throws NotInvertible when c₀ vanishes.
struct RelativeInverse {
  Mat identity;
  Mat inverse;
};
RelativeInverse relative_inverse(const Mat& A, bool weighted = true);

}  // namespace dimfree
