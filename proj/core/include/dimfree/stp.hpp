#pragma once

#include "dimfree/types.hpp"

namespace dimfree {

enum class StpKind { Type1Left, Type1Right, Type2Left, Type2Right };
enum class MvKind { Type1, Type2 };
enum class StaKind { VecBar, VecHat, SqBar, SqHat, MatHat };
enum class Sign { Plus, Minus };

// Matrix-matrix STP. A is m×n, B is p×q, t = lcm(n, p).
//   type1_left  (A⊗I_{t/n})(B⊗I_{t/p})
//   type2_left  (A⊗J_{t/n})(B⊗J_{t/p})
//   *_right     Kronecker factors swapped
Mat mm_stp(const Mat& A, const Mat& B, StpKind kind = StpKind::Type1Left);
Shape mm_stp_shape(Shape a, Shape b);

inline Mat ltimes(const Mat& A, const Mat& B) { return mm_stp(A, B, StpKind::Type1Left); }
inline Mat rtimes(const Mat& A, const Mat& B) { return mm_stp(A, B, StpKind::Type1Right); }
inline Mat circ(const Mat& A, const Mat& B) { return mm_stp(A, B, StpKind::Type2Left); }

// type1: (A⊗I_{t/n})(x⊗1_{t/p}); type2 uses J_{t/n} in place of I_{t/n}.
HVec mv_stp(const Mat& A, const HVec& x, MvKind kind = MvKind::Type1);
Index mv_stp_dim(Shape a, Index p);

// <x⊗1_{t/m}, y⊗1_{t/n}>, unnormalized.
double vv_stp(const HVec& x, const HVec& y);

// A·Psi_{n×p}·B, shape m×q.
Mat dk_stp(const Mat& A, const Mat& B, bool weighted = true);
HVec dk_stp_vec(const Mat& A, const HVec& x, bool weighted = true);

// (A⊗E_{s/m×t/n}) ⊸ (B⊗E_{s/p×t/q}), s = lcm(m,p), t = lcm(n,q).
Mat pseudo_stp(const Mat& A, const Mat& B);

// Vector kinds only (VecBar, VecHat).
HVec sta_vec(const HVec& x, const HVec& y, StaKind kind, Sign sign = Sign::Plus);
// Matrix kinds only (SqBar, SqHat, MatHat).
Mat sta(const Mat& A, const Mat& B, StaKind kind, Sign sign = Sign::Plus);

inline HVec bar_add(const HVec& x, const HVec& y) { return sta_vec(x, y, StaKind::VecBar); }
inline HVec bar_sub(const HVec& x, const HVec& y) {
  return sta_vec(x, y, StaKind::VecBar, Sign::Minus);
}
inline HVec vec_hat_add(const HVec& x, const HVec& y) { return sta_vec(x, y, StaKind::VecHat); }
inline HVec vec_hat_sub(const HVec& x, const HVec& y) {
  return sta_vec(x, y, StaKind::VecHat, Sign::Minus);
}
inline Mat hat_add(const Mat& A, const Mat& B) { return sta(A, B, StaKind::MatHat); }
inline Mat hat_sub(const Mat& A, const Mat& B) {
  return sta(A, B, StaKind::MatHat, Sign::Minus);
}

}  // namespace dimfree
