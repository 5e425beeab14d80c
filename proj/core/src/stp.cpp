#include "dimfree/stp.hpp"

#include "dimfree/errors.hpp"
#include "dimfree/lattice.hpp"
#include "dimfree/weights.hpp"

namespace dimfree {

namespace {

std::string shapes(const Mat& A, const Mat& B) {
  return to_string(shape_of(A)) + " and " + to_string(shape_of(B));
}

Mat left_average(const Mat& A, Index k) { return k == 1 ? A : kron(j_mat(k), A); }

}  // namespace

Shape mm_stp_shape(Shape a, Shape b) {
  const Index t = lcm(a.cols, b.rows);
  return {checked_mul(a.rows, t / a.cols), checked_mul(b.cols, t / b.rows)};
}

Mat mm_stp(const Mat& A, const Mat& B, StpKind kind) {
  mm_stp_shape(shape_of(A), shape_of(B));
  const Index n = A.cols(), p = B.rows();
  if (n == p) return A * B;
  const Index t = lcm(n, p);
  switch (kind) {
    case StpKind::Type1Left:
      return inflate_identity(A, t / n) * inflate_identity(B, t / p);
    case StpKind::Type1Right:
      return inflate_identity_left(A, t / n) * inflate_identity_left(B, t / p);
    case StpKind::Type2Left:
      return inflate_average(A, t / n) * inflate_average(B, t / p);
    case StpKind::Type2Right:
      return left_average(A, t / n) * left_average(B, t / p);
  }
  throw DomainError("unknown STP kind");
}

Index mv_stp_dim(Shape a, Index p) { return checked_mul(a.rows, lcm(a.cols, p) / a.cols); }

HVec mv_stp(const Mat& A, const HVec& x, MvKind kind) {
  const Index n = A.cols(), p = x.size();
  mv_stp_dim(shape_of(A), p);
  if (n == p) return A * x;
  const Index t = lcm(n, p);
  const HVec xs = stretch(x, t / p);
  if (kind == MvKind::Type1) return inflate_identity(A, t / n) * xs;
  return inflate_average(A, t / n) * xs;
}

double vv_stp(const HVec& x, const HVec& y) {
  if (x.size() == y.size()) return x.dot(y);
  const Index t = lcm(x.size(), y.size());
  return stretch(x, t / x.size()).dot(stretch(y, t / y.size()));
}

Mat dk_stp(const Mat& A, const Mat& B, bool weighted) {
  const Index n = A.cols(), p = B.rows();
  if (n == p) return A * B;
  return A * bridge(n, p, weighted) * B;
}

HVec dk_stp_vec(const Mat& A, const HVec& x, bool weighted) {
  const Index n = A.cols(), p = x.size();
  if (n == p) return A * x;
  return A * (bridge(n, p, weighted) * x);
}

Mat pseudo_stp(const Mat& A, const Mat& B) {
  const Shape j = join(shape_of(A), shape_of(B));
  const Mat Ai = inflate_e(A, j.rows / A.rows(), j.cols / A.cols());
  const Mat Bi = inflate_e(B, j.rows / B.rows(), j.cols / B.cols());
  return dk_stp(Ai, Bi, true);
}

HVec sta_vec(const HVec& x, const HVec& y, StaKind kind, Sign sign) {
  if (kind != StaKind::VecBar && kind != StaKind::VecHat) {
    throw ShapeError("matrix addition kind applied to vectors");
  }
  const double s = sign == Sign::Plus ? 1.0 : -1.0;
  if (x.size() == y.size()) return x + s * y;
  const Index t = lcm(x.size(), y.size());
  const bool e = kind == StaKind::VecHat;
  return stretch(x, t / x.size(), e) + s * stretch(y, t / y.size(), e);
}

Mat sta(const Mat& A, const Mat& B, StaKind kind, Sign sign) {
  const double s = sign == Sign::Plus ? 1.0 : -1.0;
  switch (kind) {
    case StaKind::VecBar:
    case StaKind::VecHat:
      throw ShapeError("vector addition kind applied to matrices " + shapes(A, B));
    case StaKind::SqBar:
    case StaKind::SqHat: {
      if (A.rows() != A.cols() || B.rows() != B.cols()) {
        throw ShapeError("square addition needs square operands, got " + shapes(A, B));
      }
      if (A.rows() == B.rows()) return A + s * B;
      const Index t = lcm(A.rows(), B.rows());
      if (kind == StaKind::SqBar) {
        return inflate_identity(A, t / A.rows()) + s * inflate_identity(B, t / B.rows());
      }
      return inflate_average(A, t / A.rows()) + s * inflate_average(B, t / B.rows());
    }
    case StaKind::MatHat: {
      if (shape_of(A) == shape_of(B)) return A + s * B;
      const Shape j = join(shape_of(A), shape_of(B));
      return inflate_e(A, j.rows / A.rows(), j.cols / A.cols()) +
             s * inflate_e(B, j.rows / B.rows(), j.cols / B.cols());
    }
  }
  throw DomainError("unknown addition kind");
}

}  // namespace dimfree
