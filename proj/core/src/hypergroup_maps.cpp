#include "dimfree/hypergroup_maps.hpp"

#include "dimfree/errors.hpp"
#include "dimfree/lattice.hpp"
#include "dimfree/stp.hpp"
#include "dimfree/weights.hpp"

namespace dimfree {

Mat box(const Mat& A) {
  const Index t = lcm(A.rows(), A.cols());
  return inflate_e(A, t / A.rows(), t / A.cols());
}

Mat sym_alt(const Mat& A, SymAltMode mode) {
  const Mat At = A.transpose();
  const Mat S = mode == SymAltMode::Symmetrize ? hat_add(A, At) : hat_sub(A, At);
  return 0.5 * S;
}

bool is_sym_skew(const Mat& A, SymSkew mode, double tol) {
  const Mat X = box(A);
  const Mat D = mode == SymSkew::Symmetric ? Mat(X - X.transpose()) : Mat(X + X.transpose());
  return D.cwiseAbs().maxCoeff() <= tol;
}

Poly s_char_poly(const Mat& A) { return charpoly(box(A)); }

std::vector<SEigenPair> s_spectrum(const Mat& A) {
  const Eigen::MatrixXd X = box(A);
  Eigen::EigenSolver<Eigen::MatrixXd> es(X, true);
  if (es.info() != Eigen::Success) {
    throw NumericError("eigensolver did not converge for box(A) of size " +
                       std::to_string(X.rows()));
  }
  std::vector<SEigenPair> out;
  out.reserve(static_cast<std::size_t>(X.rows()));
  for (Index i = 0; i < X.rows(); ++i) {
    out.push_back({es.eigenvalues()(i), es.eigenvectors().col(i)});
  }
  return out;
}

double box_trace(const Mat& A) { return box(A).trace(); }

}  // namespace dimfree
