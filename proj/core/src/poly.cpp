#include "dimfree/poly.hpp"

#include <sstream>

#include "dimfree/errors.hpp"
#include "dimfree/matrix_io.hpp"

namespace dimfree {

Poly::Poly(std::vector<double> coeffs, bool monic) : coeffs_(std::move(coeffs)), monic_(monic) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  if (monic_ && coeffs_.back() != 1.0) throw DomainError("monic polynomial needs leading coefficient 1");
}

double Poly::operator()(double x) const {
  double r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

std::complex<double> Poly::operator()(std::complex<double> x) const {
  std::complex<double> r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

Mat Poly::operator()(const Mat& A) const {
  if (A.rows() != A.cols()) throw ShapeError("polynomial argument must be square");
  const Index n = A.rows();
  Mat R = Mat::Zero(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    R = R * A;
    R.diagonal().array() += *it;
  }
  return R;
}

std::string Poly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (Index i = degree(); i >= 0; --i) {
    const double c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0.0) continue;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    const double a = std::abs(c);
    if (i == 0) os << format_double(a);
    else if (a != 1.0) os << format_double(a) << "*";
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Poly charpoly(const Mat& A) {
  if (A.rows() != A.cols()) throw ShapeError("characteristic polynomial needs a square matrix");
  const Index n = A.rows();
  Mat H = A;
  if (n > 2) {
    const Eigen::MatrixXd dense = A;
    Eigen::HessenbergDecomposition<Eigen::MatrixXd> hd(dense);
    H = hd.matrixH();
  }
  // p[i] is det(xI - H_i) for the leading i×i block; coefficients ascending.
  std::vector<std::vector<double>> p(static_cast<std::size_t>(n + 1));
  p[0] = {1.0};
  for (Index i = 1; i <= n; ++i) {
    std::vector<double> q(static_cast<std::size_t>(i + 1), 0.0);
    const auto& prev = p[static_cast<std::size_t>(i - 1)];
    const double h = H(i - 1, i - 1);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      q[j + 1] += prev[j];
      q[j] -= h * prev[j];
    }
    double beta = 1.0;
    for (Index m = 1; m < i; ++m) {
      beta *= H(i - m, i - m - 1);
      const double w = H(i - 1 - m, i - 1) * beta;
      if (w == 0.0) continue;
      const auto& lower = p[static_cast<std::size_t>(i - m - 1)];
      for (std::size_t j = 0; j < lower.size(); ++j) q[j] -= w * lower[j];
    }
    p[static_cast<std::size_t>(i)] = std::move(q);
  }
  auto c = p[static_cast<std::size_t>(n)];
  c.back() = 1.0;
  return Poly(std::move(c), true);
}

}  // namespace dimfree
