#include "dimfree/lie.hpp"

#include <cmath>

#include "dimfree/errors.hpp"
#include "dimfree/hypergroup_maps.hpp"
#include "dimfree/lattice.hpp"
#include "dimfree/stp.hpp"
#include "dimfree/weights.hpp"

namespace dimfree {

namespace {

constexpr double kCriterionBoundary = 1e-10;

double max_abs(const Mat& A) { return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff(); }

void require_same_shape(const Mat& A, const Mat& B, const char* what) {
  if (shape_of(A) != shape_of(B)) {
    throw ShapeError(std::string(what) + " needs equal shapes, got " + to_string(shape_of(A)) +
                     " and " + to_string(shape_of(B)));
  }
}

}  // namespace

ExtMat ExtMat::identity(Shape s) {
  require_shape(s);
  return {1.0, Mat::Zero(s.rows, s.cols)};
}

Mat ExtMat::to_matrix() const {
  if (body.rows() != body.cols()) {
    throw ShapeError("I_{m×n} has no matrix form for non-square shape " + to_string(shape()));
  }
  Mat X = body;
  X.diagonal().array() += scalar;
  return X;
}

Mat restricted_form(const Mat& A, bool weighted) {
  if (A.rows() == A.cols()) return A;
  return A * bridge(A.cols(), A.rows(), weighted);
}

Mat bracket(const Mat& A, const Mat& B, BracketKind kind, bool weighted) {
  if (kind == BracketKind::Dk) {
    require_same_shape(A, B, "DK bracket");
    return dk_stp(A, B, weighted) - dk_stp(B, A, weighted);
  }
  return hat_sub(pseudo_stp(A, B), pseudo_stp(B, A));
}

Poly char_poly(const Mat& A, bool weighted) { return charpoly(restricted_form(A, weighted)); }

Poly reduced_char_poly(const Mat& A, bool weighted) {
  if (A.cols() >= A.rows()) return char_poly(A, weighted);
  return charpoly(bridge(A.cols(), A.rows(), weighted) * A);
}

Mat dk_power_mat(const Mat& A, Index k, bool weighted) {
  if (k < 1) throw DomainError("dk_power_mat needs k >= 1");
  if (k == 1) return A;
  // A^{<k>} = (AΨ)^{k-1} A
  const Mat P = restricted_form(A, weighted);
  Mat R = A;
  for (Index i = 1; i < k; ++i) R = P * R;
  return R;
}

ExtMat dk_power(const Mat& A, Index k, bool weighted) {
  if (k < 0) throw DomainError("dk_power needs k >= 0");
  if (k == 0) return ExtMat::identity(shape_of(A));
  return ExtMat::pure(dk_power_mat(A, k, weighted));
}

Mat ch_residual(const Mat& A, const Poly& p, bool weighted) {
  const Mat P = restricted_form(A, weighted);
  Mat term = A;
  Mat sum = p[0] * A;
  for (Index j = 1; j <= p.degree(); ++j) {
    term = P * term;
    sum += p[j] * term;
  }
  return sum;
}

ExtMat ext_ops(const ExtMat& X, const ExtMat& Y, ExtOp op, bool weighted) {
  require_same_shape(X.body, Y.body, "extended-ring operation");
  if (op == ExtOp::Add) return {X.scalar + Y.scalar, X.body + Y.body};
  return {X.scalar * Y.scalar,
          X.scalar * Y.body + Y.scalar * X.body + dk_stp(X.body, Y.body, weighted)};
}

InverseCoefficients inverse_coefficients(const Mat& A0, bool weighted) {
  Poly p = reduced_char_poly(A0, weighted);
  const Index d = p.degree();
  // c_j = p[j-1]; x_j = a_j x_d + b_j with a_1 = c_1, b_1 = -1,
  // a_j = c_j - a_{j-1}, b_j = -b_{j-1}.
  std::vector<double> a(static_cast<std::size_t>(d)), b(static_cast<std::size_t>(d));
  a[0] = p[0];
  b[0] = -1.0;
  for (Index j = 1; j < d; ++j) {
    a[static_cast<std::size_t>(j)] = p[j] - a[static_cast<std::size_t>(j - 1)];
    b[static_cast<std::size_t>(j)] = -b[static_cast<std::size_t>(j - 1)];
  }
  const double criterion = a.back() - 1.0;
  std::vector<double> x;
  if (criterion != 0.0) {
    x.resize(static_cast<std::size_t>(d));
    const double xd = -b.back() / criterion;
    for (Index j = 0; j + 1 < d; ++j) {
      x[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] * xd + b[static_cast<std::size_t>(j)];
    }
    x.back() = xd;
  }
  return {std::move(p), std::move(x), criterion};
}

namespace {

// Matrix of B ↦ B + A0⊸B on row-major vec(B).
Mat inverse_system(const Mat& A0, bool weighted) {
  const Index m = A0.rows(), n = A0.cols();
  const Index N = checked_mul(m, n);
  Mat K(N, N);
  Mat E = Mat::Zero(m, n);
  for (Index c = 0; c < N; ++c) {
    E(c / n, c % n) = 1.0;
    const Mat L = E + dk_stp(A0, E, weighted);
    K.col(c) = Eigen::Map<const Eigen::VectorXd>(L.data(), N);
    E(c / n, c % n) = 0.0;
  }
  return K;
}

}  // namespace

ExtMat ext_invert(const ExtMat& X, InvertMethod method, bool weighted) {
  if (X.scalar == 0.0) throw DomainError("extended matrix with zero scalar part is not invertible");
  const double a = X.scalar;
  const Mat A0 = X.body / a;
  const Index m = A0.rows(), n = A0.cols();

  const InverseCoefficients ic = inverse_coefficients(A0, weighted);
  const double D = ic.criterion;
  const Mat K = inverse_system(A0, weighted);
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(K);

  const bool boundary = std::abs(D) <= kCriterionBoundary;
  if (D == 0.0 || (boundary && !lu.isInvertible()) ||
      (method == InvertMethod::LinearSolve && !lu.isInvertible())) {
    throw NotInvertible("I + A0 is not invertible (criterion " + std::to_string(D) + ")", D);
  }

  Mat B0;
  if (method == InvertMethod::ClosedForm) {
    B0 = Mat::Zero(m, n);
    const Mat P = restricted_form(A0, weighted);
    Mat term = A0;
    for (std::size_t i = 0; i < ic.x.size(); ++i) {
      if (i > 0) term = P * term;
      B0 += ic.x[i] * term;
    }
  } else {
    const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(A0.data(), m * n);
    const Eigen::VectorXd v = lu.solve(rhs);
    B0 = Eigen::Map<const Mat>(v.data(), m, n);
  }
  if (!B0.allFinite()) throw NotInvertible("inverse body is not finite", D);
  return {1.0 / a, B0 / a};
}

ExtMat ext_exp(const Mat& B, bool weighted, int max_terms, double tol) {
  const Mat P = restricted_form(B, weighted);
  Mat sum = Mat::Zero(B.rows(), B.cols());
  Mat term = B;
  for (int k = 1; k <= max_terms; ++k) {
    sum += term;
    const double tn = max_abs(term);
    if (tn <= tol * std::max(1.0, max_abs(sum))) return {1.0, sum};
    term = P * term / static_cast<double>(k + 1);
  }
  throw NonConvergent("exp series did not converge in " + std::to_string(max_terms) + " terms",
                      max_abs(term));
}

Mat ext_log(const ExtMat& X, bool weighted, int max_terms, double tol) {
  if (X.scalar != 1.0) throw DomainError("log needs an extended matrix with scalar part 1");
  const Mat& B = X.body;
  const Mat P = restricted_form(B, weighted);
  const double rho = P.size() == 0 ? 0.0 : Eigen::MatrixXd(P).eigenvalues().cwiseAbs().maxCoeff();
  if (!(rho < 1.0)) {
    throw NonConvergent("log series outside its convergence region (spectral radius " +
                        std::to_string(rho) + ")", rho);
  }
  Mat sum = Mat::Zero(B.rows(), B.cols());
  Mat power = B;
  for (int i = 1; i <= max_terms; ++i) {
    const Mat term = power / static_cast<double>(i);
    if (i % 2 == 1) sum += term;
    else sum -= term;
    if (max_abs(term) <= tol * std::max(1.0, max_abs(sum))) return sum;
    power = P * power;
  }
  throw NonConvergent("log series did not converge in " + std::to_string(max_terms) + " terms",
                      max_abs(power) / max_terms);
}

bool ideal_member(const Mat& A, Ideal which, bool weighted, double tol) {
  const Mat P = restricted_form(A, weighted);
  const double tr = P.trace();
  if (which == Ideal::Q) return std::abs(tr) <= tol;
  Mat D = P;
  D.diagonal().array() -= tr / static_cast<double>(P.rows());
  return max_abs(D) <= tol;
}

std::vector<Mat> z_basis(Index m, Index n, bool weighted) {
  require_shape({m, n});
  // Unknowns: row-major vec(A) then r. Constraint AΨ_{n×m} − rI_m = 0.
  const Mat Psi = bridge(n, m, weighted);
  const Index N = checked_mul(m, n) + 1;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(m * m, N);
  for (Index i = 0; i < m; ++i) {
    for (Index k = 0; k < m; ++k) {
      for (Index j = 0; j < n; ++j) L(i * m + k, i * n + j) = Psi(j, k);
      if (i == k) L(i * m + k, N - 1) = -1.0;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(L, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thresh = 1e-10 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  Eigen::MatrixXd V = svd.matrixV().rightCols(N - rank);

  // Normalize: one element with r = 1, the rest with r = 0.
  if (V.cols() > 0) {
    Index pivot = 0;
    V.row(N - 1).cwiseAbs().maxCoeff(&pivot);
    if (std::abs(V(N - 1, pivot)) > thresh) {
      V.col(pivot) /= V(N - 1, pivot);
      for (Index c = 0; c < V.cols(); ++c)
        if (c != pivot) V.col(c) -= V(N - 1, c) * V.col(pivot);
      V.col(0).swap(V.col(pivot));
    }
  }

  std::vector<Mat> basis;
  for (Index c = 0; c < V.cols(); ++c) {
    Eigen::VectorXd v = V.col(c).head(N - 1);
    if (std::abs(V(N - 1, c) - 1.0) > 1e-12) v /= v.cwiseAbs().maxCoeff();
    Mat A = Eigen::Map<const Mat>(v.data(), m, n);
    for (Index i = 0; i < A.size(); ++i)
      if (std::abs(A.data()[i]) < 1e-14) A.data()[i] = 0.0;
    basis.push_back(std::move(A));
  }
  return basis;
}

bool gm_member(const Mat& A, const Mat& M, double tol) {
  const Mat At = A.transpose();
  return max_abs(hat_add(pseudo_stp(A, M), pseudo_stp(M, At))) <= tol;
}

bool gm_member_boxed(const Mat& A, const Mat& M, double tol) {
  const Mat At = A.transpose();
  return max_abs(hat_add(box(pseudo_stp(A, M)), box(pseudo_stp(M, At)))) <= tol;
}

ExtMat hyper_gl_mul(const ExtMat& X, const ExtMat& Y) {
  const Shape j = join(X.shape(), Y.shape());
  const Mat Ai = inflate_e(X.body, j.rows / X.body.rows(), j.cols / X.body.cols());
  const Mat Bi = inflate_e(Y.body, j.rows / Y.body.rows(), j.cols / Y.body.cols());
  return {X.scalar * Y.scalar, Y.scalar * Ai + X.scalar * Bi + pseudo_stp(X.body, Y.body)};
}

RelativeInverse relative_inverse(const Mat& A, bool weighted) {
  const Poly p = char_poly(A, weighted);
  const Index m = p.degree();
  const double c0 = p[0];
  if (std::abs(c0) <= 1e-12 * std::max(1.0, max_abs(restricted_form(A, weighted)))) {
    throw NotInvertible("relative inverse needs a nonzero constant coefficient", c0);
  }
  std::vector<Mat> pw{A};
  for (Index j = 2; j <= m; ++j) pw.push_back(dk_stp(pw.back(), A, weighted));
  Mat IA = Mat::Zero(A.rows(), A.cols());
  for (Index j = 1; j <= m; ++j) IA += p[j] * pw[static_cast<std::size_t>(j - 1)];
  IA /= -c0;
  Mat inv = p[1] * IA;
  for (Index j = 2; j <= m; ++j) inv += p[j] * pw[static_cast<std::size_t>(j - 2)];
  inv /= -c0;
  return {std::move(IA), std::move(inv)};
}

}  // namespace dimfree
