#include "dimfree/equivalence.hpp"

#include <cmath>
#include <string>

#include "dimfree/errors.hpp"
#include "dimfree/lattice.hpp"
#include "dimfree/weights.hpp"

namespace dimfree {

namespace {

double max_abs_diff(const Mat& A, const Mat& B) {
  return (A - B).cwiseAbs().maxCoeff();
}

double max_abs_diff(const HVec& x, const HVec& y) { return (x - y).cwiseAbs().maxCoeff(); }

void require_square(const Mat& A, const char* what) {
  if (A.rows() != A.cols()) {
    throw ShapeError(std::string(what) + " needs a square matrix, got " +
                     to_string(shape_of(A)));
  }
}

// Mean of each a×b block, scaled.
Mat block_means(const Mat& A, Index a, Index b, double scale) {
  Mat C(A.rows() / a, A.cols() / b);
  for (Index i = 0; i < C.rows(); ++i)
    for (Index j = 0; j < C.cols(); ++j)
      C(i, j) = scale * A.block(i * a, j * b, a, b).mean();
  return C;
}

// Mean of the diagonal of each k×k block.
Mat block_diag_means(const Mat& A, Index k) {
  Mat C(A.rows() / k, A.cols() / k);
  for (Index i = 0; i < C.rows(); ++i)
    for (Index j = 0; j < C.cols(); ++j)
      C(i, j) = A.block(i * k, j * k, k, k).diagonal().mean();
  return C;
}

}  // namespace

Reduction<HVec> reduce_vec(const HVec& x, double tol, VecWeight weight) {
  const Index m = x.size();
  const bool e = weight == VecWeight::E;
  for (Index s : divisors_ascending(m)) {
    const Index k = m / s;
    const double scale = e ? std::sqrt(static_cast<double>(k)) : 1.0;
    HVec z(s);
    for (Index i = 0; i < s; ++i) z(i) = scale * x.segment(i * k, k).mean();
    if (k == 1 || max_abs_diff(x, stretch(z, k, e)) <= tol) return {z, k, 1};
  }
  return {x, 1, 1};
}

Reduction<Mat> reduce_mat(const Mat& A, MatWeight weight, double tol) {
  if (weight == MatWeight::E) {
    for (Index r : divisors_ascending(A.rows())) {
      for (Index s : divisors_ascending(A.cols())) {
        const Index a = A.rows() / r, b = A.cols() / s;
        if (a == 1 && b == 1) return {A, 1, 1};
        const Mat C = block_means(A, a, b, std::sqrt(static_cast<double>(a * b)));
        if (max_abs_diff(A, inflate_e(C, a, b)) <= tol) return {C, a, b};
      }
    }
    return {A, 1, 1};
  }
  require_square(A, weight == MatWeight::I ? "reduction with weight I" : "reduction with weight J");
  for (Index r : divisors_ascending(A.rows())) {
    const Index k = A.rows() / r;
    if (k == 1) return {A, 1, 1};
    if (weight == MatWeight::I) {
      const Mat C = block_diag_means(A, k);
      if (max_abs_diff(A, inflate_identity(C, k)) <= tol) return {C, k, k};
    } else {
      const Mat C = block_means(A, k, k, static_cast<double>(k));
      if (max_abs_diff(A, inflate_average(C, k)) <= tol) return {C, k, k};
    }
  }
  return {A, 1, 1};
}

Reduction<Mat> reduce_mat_right_identity(const Mat& A, double tol) {
  const Index g = gcd(A.rows(), A.cols());
  const auto ks = divisors_ascending(g);
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    const Index k = *it;
    if (k == 1) break;
    const Index r = A.rows() / k, c = A.cols() / k;
    Mat C = Mat::Zero(r, c);
    for (Index s = 0; s < k; ++s) C += A.block(s * r, s * c, r, c);
    C /= static_cast<double>(k);
    if (max_abs_diff(A, inflate_identity_left(C, k)) <= tol) return {C, k, k};
  }
  return {A, 1, 1};
}

HVec inflate(const Reduction<HVec>& r, VecWeight weight) {
  return stretch(r.representative, r.row_factor, weight == VecWeight::E);
}

Mat inflate(const Reduction<Mat>& r, MatWeight weight) {
  switch (weight) {
    case MatWeight::I:
      return inflate_identity(r.representative, r.row_factor);
    case MatWeight::J:
      return inflate_average(r.representative, r.row_factor);
    case MatWeight::E:
      return inflate_e(r.representative, r.row_factor, r.col_factor);
  }
  throw DomainError("unknown weight");
}

namespace {

bool is_vector_relation(Relation r) { return r == Relation::VecJ || r == Relation::VecE; }

void require_vector_relation(Relation r) {
  if (!is_vector_relation(r)) {
    throw DomainError(std::string("relation ") + relation_name(r) + " applies to matrices");
  }
}

void require_matrix_relation(Relation r) {
  if (is_vector_relation(r)) {
    throw DomainError(std::string("relation ") + relation_name(r) + " applies to vectors");
  }
}

}  // namespace

bool equivalent(const HVec& x, const HVec& y, Relation relation, double tol) {
  require_vector_relation(relation);
  const bool e = relation == Relation::VecE;
  const Index t = lcm(x.size(), y.size());
  return max_abs_diff(stretch(x, t / x.size(), e), stretch(y, t / y.size(), e)) <= tol;
}

bool equivalent(const Mat& A, const Mat& B, Relation relation, double tol) {
  require_matrix_relation(relation);
  if (relation == Relation::MatE) {
    const Shape j = join(shape_of(A), shape_of(B));
    return max_abs_diff(inflate_e(A, j.rows / A.rows(), j.cols / A.cols()),
                        inflate_e(B, j.rows / B.rows(), j.cols / B.cols())) <= tol;
  }
  require_square(A, relation_name(relation));
  require_square(B, relation_name(relation));
  const Index t = lcm(A.rows(), B.rows());
  const Index a = t / A.rows(), b = t / B.rows();
  switch (relation) {
    case Relation::SqI:
      return max_abs_diff(inflate_identity(A, a), inflate_identity(B, b)) <= tol;
    case Relation::SqJ:
      return max_abs_diff(inflate_average(A, a), inflate_average(B, b)) <= tol;
    case Relation::PermRight:
      return max_abs_diff(inflate_identity_left(A, a), inflate_identity_left(B, b)) <= tol;
    default:
      break;
  }
  throw DomainError("unhandled relation");
}

bool equivalent_by_reduction(const HVec& x, const HVec& y, Relation relation, double tol) {
  require_vector_relation(relation);
  const VecWeight w = relation == Relation::VecE ? VecWeight::E : VecWeight::Ones;
  const HVec zx = reduce_vec(x, tol, w).representative;
  const HVec zy = reduce_vec(y, tol, w).representative;
  return zx.size() == zy.size() && max_abs_diff(zx, zy) <= tol;
}

bool equivalent_by_reduction(const Mat& A, const Mat& B, Relation relation, double tol) {
  require_matrix_relation(relation);
  Mat ca, cb;
  switch (relation) {
    case Relation::SqI:
      ca = reduce_mat(A, MatWeight::I, tol).representative;
      cb = reduce_mat(B, MatWeight::I, tol).representative;
      break;
    case Relation::SqJ:
      ca = reduce_mat(A, MatWeight::J, tol).representative;
      cb = reduce_mat(B, MatWeight::J, tol).representative;
      break;
    case Relation::MatE:
      ca = reduce_mat(A, MatWeight::E, tol).representative;
      cb = reduce_mat(B, MatWeight::E, tol).representative;
      break;
    case Relation::PermRight:
      require_square(A, "perm_right");
      require_square(B, "perm_right");
      ca = reduce_mat_right_identity(A, tol).representative;
      cb = reduce_mat_right_identity(B, tol).representative;
      break;
    default:
      throw DomainError("unhandled relation");
  }
  return shape_of(ca) == shape_of(cb) && max_abs_diff(ca, cb) <= tol;
}

Relation parse_relation(const std::string& name) {
  if (name == "vec_J") return Relation::VecJ;
  if (name == "vec_E") return Relation::VecE;
  if (name == "sq_I") return Relation::SqI;
  if (name == "sq_J") return Relation::SqJ;
  if (name == "mat_E") return Relation::MatE;
  if (name == "perm_right") return Relation::PermRight;
  throw DomainError("unknown relation '" + name + "'");
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::VecJ: return "vec_J";
    case Relation::VecE: return "vec_E";
    case Relation::SqI: return "sq_I";
    case Relation::SqJ: return "sq_J";
    case Relation::MatE: return "mat_E";
    case Relation::PermRight: return "perm_right";
  }
  return "?";
}

}  // namespace dimfree
