#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dimfree/types.hpp"

namespace dimfree {

// p(x) = c[0] + c[1] x + ... + c[d] x^d.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs, bool monic = false);

  const std::vector<double>& coeffs() const { return coeffs_; }
  Index degree() const { return static_cast<Index>(coeffs_.size()) - 1; }
  bool monic() const { return monic_; }
  double operator[](Index i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;
  // Horner on a square matrix argument.
  Mat operator()(const Mat& A) const;

  std::string to_string() const;

 private:
  std::vector<double> coeffs_{0.0};
  bool monic_ = false;
};

// Characteristic polynomial det(xI - A) of a square matrix via Hessenberg
// reduction and the La Budde recurrence.
Poly charpoly(const Mat& A);

}  // namespace dimfree
