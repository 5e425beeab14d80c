#include "dimfree/weights.hpp"

#include <cmath>

#include "dimfree/errors.hpp"
#include "dimfree/lattice.hpp"

namespace dimfree {

bool approx_equal(const Mat& A, const Mat& B, double atol, double rtol) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < A.cols(); ++j) {
      const double x = A(i, j), y = B(i, j);
      if (std::abs(x - y) > atol + rtol * std::max(std::abs(x), std::abs(y))) return false;
    }
  }
  return true;
}

bool all_finite(const Mat& A) { return A.allFinite(); }
bool all_finite(const HVec& x) { return x.allFinite(); }

namespace {

void require_dim(Index n) {
  if (n < 1) throw DomainError("weight dimension must be >= 1, got " + std::to_string(n));
}

}  // namespace

HVec ones(Index k) {
  require_dim(k);
  return HVec::Ones(k);
}

HVec e_vec(Index n) {
  require_dim(n);
  return HVec::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

Mat e_mat(Index m, Index n) {
  require_dim(m);
  require_dim(n);
  return Mat::Constant(m, n, 1.0 / std::sqrt(static_cast<double>(checked_mul(m, n))));
}

Mat j_mat(Index n) {
  require_dim(n);
  return Mat::Constant(n, n, 1.0 / static_cast<double>(n));
}

Mat identity(Index n) {
  require_dim(n);
  return Mat::Identity(n, n);
}

Mat weight(WeightKind kind, Index m, std::optional<Index> n) {
  switch (kind) {
    case WeightKind::OnesVec:
      return as_column(ones(m));
    case WeightKind::EVec:
      return as_column(e_vec(m));
    case WeightKind::EMat:
      if (!n) throw DomainError("e_mat weight requires a column count");
      return e_mat(m, *n);
    case WeightKind::JMat:
      return j_mat(m);
    case WeightKind::Identity:
      return identity(m);
  }
  throw DomainError("unknown weight kind");
}

Mat kron(const Mat& A, const Mat& B) {
  const Index rows = checked_mul(A.rows(), B.rows());
  const Index cols = checked_mul(A.cols(), B.cols());
  Mat K(rows, cols);
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

HVec kron_vec(const HVec& x, const HVec& y) {
  HVec z(checked_mul(x.size(), y.size()));
  for (Index i = 0; i < x.size(); ++i) z.segment(i * y.size(), y.size()) = x(i) * y;
  return z;
}

HVec stretch(const HVec& x, Index k, bool e_weighted) {
  require_dim(k);
  if (k == 1) return x;
  const double w = e_weighted ? 1.0 / std::sqrt(static_cast<double>(k)) : 1.0;
  HVec z(checked_mul(x.size(), k));
  for (Index i = 0; i < x.size(); ++i) z.segment(i * k, k).setConstant(w * x(i));
  return z;
}

Mat inflate_identity(const Mat& A, Index k) {
  require_dim(k);
  if (k == 1) return A;
  Mat K = Mat::Zero(checked_mul(A.rows(), k), checked_mul(A.cols(), k));
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      for (Index s = 0; s < k; ++s) K(i * k + s, j * k + s) = A(i, j);
  return K;
}

Mat inflate_identity_left(const Mat& A, Index k) {
  require_dim(k);
  if (k == 1) return A;
  Mat K = Mat::Zero(checked_mul(A.rows(), k), checked_mul(A.cols(), k));
  for (Index s = 0; s < k; ++s) K.block(s * A.rows(), s * A.cols(), A.rows(), A.cols()) = A;
  return K;
}

Mat inflate_average(const Mat& A, Index k) {
  require_dim(k);
  if (k == 1) return A;
  const double w = 1.0 / static_cast<double>(k);
  Mat K(checked_mul(A.rows(), k), checked_mul(A.cols(), k));
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j) K.block(i * k, j * k, k, k).setConstant(w * A(i, j));
  return K;
}

Mat inflate_e(const Mat& A, Index a, Index b) {
  require_dim(a);
  require_dim(b);
  if (a == 1 && b == 1) return A;
  const double w = 1.0 / std::sqrt(static_cast<double>(checked_mul(a, b)));
  Mat K(checked_mul(A.rows(), a), checked_mul(A.cols(), b));
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j) K.block(i * a, j * b, a, b).setConstant(w * A(i, j));
  return K;
}

Mat bridge(Index n, Index p, bool weighted) {
  // Entry (i, j) counts the overlap of row block i (length t/n) with column
  // block j (length t/p) on {0..t-1}.
  const Index t = lcm(n, p);
  const Index a = t / n, b = t / p;
  Mat Psi = Mat::Zero(n, p);
  for (Index i = 0; i < n; ++i) {
    const Index lo = i * a, hi = lo + a;
    for (Index j = lo / b; j < p && j * b < hi; ++j) {
      const Index overlap = std::min(hi, (j + 1) * b) - std::max(lo, j * b);
      if (overlap > 0) Psi(i, j) = static_cast<double>(overlap);
    }
  }
  if (weighted && n != p) {
    Psi *= std::sqrt(static_cast<double>(checked_mul(n, p))) / static_cast<double>(t);
  }
  return Psi;
}

HVec as_hvec(const Mat& A) {
  if (A.cols() != 1) throw ShapeError("expected a column vector, got " + to_string(shape_of(A)));
  return HVec(A.col(0));
}

}  // namespace dimfree
