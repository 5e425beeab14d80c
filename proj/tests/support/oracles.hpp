#pragma once

// Reference implementations for tests. Deliberately naive and independent of
// the library's kernels: explicit Kronecker expansions, Faddeev–LeVerrier,
// brute-force block scans.

#include <cmath>
#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dimfree/types.hpp"

namespace oracle {

using dimfree::HVec;
using dimfree::Index;
using dimfree::Mat;

inline Index lcm(Index a, Index b) { return a / std::gcd(a, b) * b; }

inline Mat kron(const Mat& A, const Mat& B) {
  Mat K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      for (Index k = 0; k < B.rows(); ++k)
        for (Index l = 0; l < B.cols(); ++l) K(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l);
  return K;
}

inline Mat eye(Index n) { return Mat::Identity(n, n); }
inline Mat ones(Index m, Index n) { return Mat::Ones(m, n); }
inline Mat J(Index n) { return ones(n, n) / static_cast<double>(n); }
inline Mat E(Index m, Index n) { return ones(m, n) / std::sqrt(static_cast<double>(m * n)); }
inline Mat col(const HVec& x) { return Mat(x); }
inline HVec vec(const Mat& A) { return HVec(A.col(0)); }

// x ⊗ 1_k
inline HVec stretch(const HVec& x, Index k) { return vec(kron(col(x), ones(k, 1))); }

inline Mat ltimes(const Mat& A, const Mat& B) {
  const Index t = lcm(A.cols(), B.rows());
  return kron(A, eye(t / A.cols())) * kron(B, eye(t / B.rows()));
}
inline Mat rtimes(const Mat& A, const Mat& B) {
  const Index t = lcm(A.cols(), B.rows());
  return kron(eye(t / A.cols()), A) * kron(eye(t / B.rows()), B);
}
inline Mat circ(const Mat& A, const Mat& B) {
  const Index t = lcm(A.cols(), B.rows());
  return kron(A, J(t / A.cols())) * kron(B, J(t / B.rows()));
}

// Factored DK-STP: (A⊗Eᵀ_{t/n})(B⊗E_{t/p}), or the 1-weighted variant.
inline Mat dk(const Mat& A, const Mat& B, bool weighted = true) {
  const Index t = lcm(A.cols(), B.rows());
  const Index a = t / A.cols(), b = t / B.rows();
  const Mat wa = weighted ? E(a, 1) : ones(a, 1);
  const Mat wb = weighted ? E(b, 1) : ones(b, 1);
  return kron(A, wa.transpose()) * kron(B, wb);
}

// Pseudo-STP expanded as (A⊗E_{s/m×l/n})(B⊗E_{l/p×t/q}), l = lcm(s, t).
inline Mat pseudo(const Mat& A, const Mat& B) {
  const Index s = lcm(A.rows(), B.rows()), t = lcm(A.cols(), B.cols());
  const Index l = lcm(s, t);
  return kron(A, E(s / A.rows(), l / A.cols())) * kron(B, E(l / B.rows(), t / B.cols()));
}

inline Mat hat(const Mat& A, const Mat& B, double sign = 1.0) {
  const Index s = lcm(A.rows(), B.rows()), t = lcm(A.cols(), B.cols());
  return kron(A, E(s / A.rows(), t / A.cols())) + sign * kron(B, E(s / B.rows(), t / B.cols()));
}

inline Mat box(const Mat& A) {
  const Index t = lcm(A.rows(), A.cols());
  return kron(A, E(t / A.rows(), t / A.cols()));
}

// Faddeev–LeVerrier: ascending coefficients of det(xI − A).
inline std::vector<double> charpoly(const Mat& A) {
  const Index n = A.rows();
  std::vector<double> c(static_cast<std::size_t>(n + 1), 0.0);
  c[static_cast<std::size_t>(n)] = 1.0;
  Mat M = Mat::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    M = A * M;
    M.diagonal().array() += c[static_cast<std::size_t>(n - k + 1)];
    const Mat AM = A * M;
    c[static_cast<std::size_t>(n - k)] = -AM.trace() / static_cast<double>(k);
  }
  return c;
}

inline double max_abs(const Mat& A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }
inline double max_abs(const HVec& x) { return x.size() ? x.cwiseAbs().maxCoeff() : 0.0; }

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 20240611) : gen_(seed) {}
  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  Index dim(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(gen_); }
  Mat mat(Index m, Index n, double lo = -1.0, double hi = 1.0) {
    Mat A(m, n);
    for (Index i = 0; i < A.size(); ++i) A.data()[i] = uniform(lo, hi);
    return A;
  }
  HVec vec(Index n, double lo = -1.0, double hi = 1.0) {
    HVec x(n);
    for (Index i = 0; i < n; ++i) x(i) = uniform(lo, hi);
    return x;
  }
  std::vector<Index> shuffle(Index n) {
    std::vector<Index> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), Index{0});
    std::shuffle(p.begin(), p.end(), gen_);
    return p;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oracle
