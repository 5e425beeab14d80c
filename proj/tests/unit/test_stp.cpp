#include <gtest/gtest.h>

#include "dimfree/errors.hpp"
#include "dimfree/stp.hpp"
#include "dimfree/weights.hpp"
#include "oracles.hpp"

using namespace dimfree;

namespace {

constexpr double kTol = 1e-9;

bool near(const Mat& A, const Mat& B, double tol = kTol) { return approx_equal(A, B, tol, tol); }
bool near(const HVec& x, const HVec& y, double tol = kTol) {
  return approx_equal(as_column(x), as_column(y), tol, tol);
}

}  // namespace

TEST(MmStp, DegeneratesToClassicalProductExactly) {
  oracle::Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const Index m = rng.dim(1, 4), n = rng.dim(1, 4), q = rng.dim(1, 4);
    const Mat A = rng.mat(m, n), B = rng.mat(n, q);
    const Mat AB = A * B;
    for (auto kind : {StpKind::Type1Left, StpKind::Type1Right, StpKind::Type2Left,
                      StpKind::Type2Right})
      EXPECT_EQ(mm_stp(A, B, kind), AB);
  }
}

TEST(MmStp, ColumnTimesColumnIsKronecker) {
  Mat x(2, 1), y(2, 1);
  x << 1, 2;
  y << 3, 5;
  Mat expect(4, 1);
  expect << 3, 5, 6, 10;
  EXPECT_EQ(ltimes(x, y), expect);
}

TEST(MmStp, IdentityAbsorbs) {
  oracle::Rng rng(11);
  const Mat B = rng.mat(6, 2);
  EXPECT_TRUE(near(ltimes(Mat::Identity(3, 3), B), B, 0));
  EXPECT_TRUE(near(ltimes(Mat::Identity(2, 2), B), B, 0));
}

TEST(MmStp, MatchesKroneckerOracle) {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat A = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat B = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    EXPECT_TRUE(near(ltimes(A, B), oracle::ltimes(A, B), 1e-12));
    EXPECT_TRUE(near(rtimes(A, B), oracle::rtimes(A, B), 1e-12));
    EXPECT_TRUE(near(circ(A, B), oracle::circ(A, B), 1e-12));
    const Index t = oracle::lcm(A.cols(), B.rows());
    const Mat right2 = oracle::kron(oracle::J(t / A.cols()), A) * oracle::kron(oracle::J(t / B.rows()), B);
    EXPECT_TRUE(near(mm_stp(A, B, StpKind::Type2Right), right2, 1e-12));
    EXPECT_EQ(shape_of(ltimes(A, B)), mm_stp_shape(shape_of(A), shape_of(B)));
  }
}

TEST(MmStp, Associativity) {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Mat A = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat B = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat C = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    for (auto kind : {StpKind::Type1Left, StpKind::Type1Right, StpKind::Type2Left,
                      StpKind::Type2Right}) {
      EXPECT_TRUE(near(mm_stp(mm_stp(A, B, kind), C, kind), mm_stp(A, mm_stp(B, C, kind), kind)))
          << "kind " << static_cast<int>(kind);
    }
  }
}

TEST(MmStp, DistributesOverAddition) {
  oracle::Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const Index m = rng.dim(1, 4), n = rng.dim(1, 4), p = rng.dim(1, 4), q = rng.dim(1, 4);
    const Mat A = rng.mat(m, n), B = rng.mat(m, n), C = rng.mat(p, q), D = rng.mat(p, q);
    EXPECT_TRUE(near(ltimes(Mat(A + B), C), ltimes(A, C) + ltimes(B, C)));
    EXPECT_TRUE(near(ltimes(A, Mat(C + D)), ltimes(A, C) + ltimes(A, D)));
  }
}

TEST(MvStp, Degeneracy) {
  oracle::Rng rng(15);
  const Mat A = rng.mat(3, 4);
  const HVec x = rng.vec(4);
  EXPECT_EQ(mv_stp(A, x, MvKind::Type1), HVec(A * x));
  EXPECT_EQ(mv_stp(A, x, MvKind::Type2), HVec(A * x));
  EXPECT_EQ(mv_stp(Mat::Identity(4, 4), x), x);
}

TEST(MvStp, Type1Example) {
  oracle::Rng rng(16);
  const Mat A = rng.mat(2, 2);
  const HVec x = rng.vec(4);
  EXPECT_TRUE(near(mv_stp(A, x), HVec(oracle::kron(A, oracle::eye(2)) * x), 1e-15));
}

TEST(MvStp, MatchesOracle) {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat A = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const HVec x = rng.vec(rng.dim(1, 6));
    const Index t = oracle::lcm(A.cols(), x.size());
    const HVec xs = oracle::stretch(x, t / x.size());
    EXPECT_TRUE(near(mv_stp(A, x, MvKind::Type1), HVec(oracle::kron(A, oracle::eye(t / A.cols())) * xs), 1e-12));
    EXPECT_TRUE(near(mv_stp(A, x, MvKind::Type2), HVec(oracle::kron(A, oracle::J(t / A.cols())) * xs), 1e-12));
    EXPECT_EQ(mv_stp(A, x).size(), mv_stp_dim(shape_of(A), x.size()));
  }
}

// The action of each MV-STP is compatible with the matching MM-STP.
TEST(MvStp, ActionIsAssociative) {
  oracle::Rng rng(18);
  for (int trial = 0; trial < 300; ++trial) {
    const Mat A = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat B = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const HVec x = rng.vec(rng.dim(1, 4));
    EXPECT_TRUE(near(mv_stp(ltimes(A, B), x, MvKind::Type1),
                     mv_stp(A, mv_stp(B, x, MvKind::Type1), MvKind::Type1)));
    EXPECT_TRUE(near(mv_stp(circ(A, B), x, MvKind::Type2),
                     mv_stp(A, mv_stp(B, x, MvKind::Type2), MvKind::Type2)));
  }
}

TEST(VvStp, Examples) {
  HVec x(2), y(3);
  x << 1, 2;
  y << 1, 2, 3;
  EXPECT_EQ(vv_stp(x, y), 20.0);
  EXPECT_EQ(vv_stp(x, x), 5.0);
  for (Index m = 1; m <= 6; ++m)
    for (Index n = 1; n <= 6; ++n)
      EXPECT_EQ(vv_stp(HVec::Ones(m), HVec::Ones(n)), static_cast<double>(oracle::lcm(m, n)));
}

TEST(DkStp, DegeneratesExactly) {
  oracle::Rng rng(19);
  const Mat A = rng.mat(2, 3), B = rng.mat(3, 4);
  EXPECT_EQ(dk_stp(A, B, true), Mat(A * B));
  EXPECT_EQ(dk_stp(A, B, false), Mat(A * B));
}

TEST(DkStp, UnweightedBridgeExample) {
  oracle::Rng rng(20);
  const Mat A = rng.mat(2, 3), B = rng.mat(2, 2);
  Mat Psi(3, 2);
  Psi << 2, 0, 1, 1, 0, 2;
  EXPECT_TRUE(near(dk_stp(A, B, false), A * Psi * B, 1e-14));
}

TEST(DkStp, MatchesFactoredOracle) {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Mat A = rng.mat(rng.dim(1, 4), rng.dim(1, 6));
    const Mat B = rng.mat(rng.dim(1, 6), rng.dim(1, 4));
    EXPECT_TRUE(near(dk_stp(A, B, true), oracle::dk(A, B, true), 1e-12));
    EXPECT_TRUE(near(dk_stp(A, B, false), oracle::dk(A, B, false), 1e-12));
    EXPECT_EQ(shape_of(dk_stp(A, B)), (Shape{A.rows(), B.cols()}));
  }
}

TEST(DkStp, AssociativeAndDistributive) {
  oracle::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const Index m = rng.dim(1, 4), n = rng.dim(1, 4);
    const Mat A = rng.mat(m, n), B = rng.mat(m, n), C = rng.mat(m, n), D = rng.mat(m, n);
    EXPECT_TRUE(near(dk_stp(dk_stp(A, B), C), dk_stp(A, dk_stp(B, C))));
    EXPECT_TRUE(near(dk_stp(Mat(A + B), C), dk_stp(A, C) + dk_stp(B, C)));
    EXPECT_TRUE(near(dk_stp(A, Mat(C + D)), dk_stp(A, C) + dk_stp(A, D)));
    // mixed shapes chain as well
    const Mat X = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat Y = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat Z = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    EXPECT_TRUE(near(dk_stp(dk_stp(X, Y, false), Z, false), dk_stp(X, dk_stp(Y, Z, false), false)));
  }
}

TEST(DkStp, TransposeLaw) {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat A = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat B = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    EXPECT_TRUE(near(dk_stp(A, B).transpose(), dk_stp(Mat(B.transpose()), Mat(A.transpose())), 1e-10));
  }
}

TEST(PseudoStp, SameShapeIsDk) {
  oracle::Rng rng(24);
  const Mat A = rng.mat(2, 3), B = rng.mat(2, 3);
  EXPECT_EQ(pseudo_stp(A, B), dk_stp(A, B, true));
}

TEST(PseudoStp, SquareOperandsUseAveragingInflation) {
  oracle::Rng rng(25);
  for (Index m = 1; m <= 4; ++m)
    for (Index n = 1; n <= 4; ++n) {
      const Mat A = rng.mat(m, m), B = rng.mat(n, n);
      const Index t = oracle::lcm(m, n);
      const Mat expect = dk_stp(oracle::kron(A, oracle::J(t / m)), oracle::kron(B, oracle::J(t / n)));
      EXPECT_TRUE(near(pseudo_stp(A, B), expect, 1e-12));
    }
}

TEST(PseudoStp, MatchesExpansionOracle) {
  oracle::Rng rng(26);
  const Mat A = rng.mat(2, 3), B = rng.mat(3, 2);
  const Mat P = pseudo_stp(A, B);
  EXPECT_EQ(shape_of(P), (Shape{6, 6}));
  EXPECT_TRUE(near(P, oracle::pseudo(A, B), 1e-12));
  for (int trial = 0; trial < 300; ++trial) {
    const Mat X = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat Y = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    EXPECT_TRUE(near(pseudo_stp(X, Y), oracle::pseudo(X, Y), 1e-12));
  }
}

TEST(PseudoStp, AssociativeAndTransposeLaws) {
  oracle::Rng rng(27);
  for (int trial = 0; trial < 300; ++trial) {
    const Mat A = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat B = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat C = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    EXPECT_TRUE(near(pseudo_stp(pseudo_stp(A, B), C), pseudo_stp(A, pseudo_stp(B, C))));
    EXPECT_TRUE(near(pseudo_stp(A, B).transpose(), pseudo_stp(Mat(B.transpose()), Mat(A.transpose())), 1e-10));
    EXPECT_TRUE(near(hat_add(A, B).transpose(), hat_add(Mat(A.transpose()), Mat(B.transpose())), 1e-10));
  }
}

TEST(PseudoStp, HyperRingDistributivity) {
  oracle::Rng rng(28);
  for (int trial = 0; trial < 300; ++trial) {
    const Mat A = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat B = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat C = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    EXPECT_TRUE(near(pseudo_stp(hat_add(A, B), C), hat_add(pseudo_stp(A, C), pseudo_stp(B, C))));
    EXPECT_TRUE(near(pseudo_stp(C, hat_add(A, B)), hat_add(pseudo_stp(C, A), pseudo_stp(C, B))));
  }
}

TEST(Sta, VecBarExample) {
  HVec x(2), y(3), expect(6);
  x << 1, 2;
  y << 1, 2, 3;
  expect << 2, 2, 3, 4, 5, 5;
  EXPECT_EQ(sta_vec(x, y, StaKind::VecBar, Sign::Plus), expect);
}

TEST(Sta, VecHatStretchesWithE) {
  HVec x(2), y(3);
  x << 1, 2;
  y << 1, 2, 3;
  const HVec expect = oracle::vec(oracle::kron(oracle::col(x), oracle::E(3, 1)) -
                                  oracle::kron(oracle::col(y), oracle::E(2, 1)));
  EXPECT_TRUE(near(vec_hat_sub(x, y), expect, 1e-15));
}

TEST(Sta, HatWithZeroIsInflation) {
  oracle::Rng rng(29);
  const Mat A = rng.mat(2, 3);
  const Mat Z = Mat::Zero(4, 2);
  EXPECT_TRUE(near(sta(A, Z, StaKind::MatHat), oracle::kron(A, oracle::E(2, 2)), 1e-15));
  EXPECT_TRUE(near(sta(Z, A, StaKind::MatHat), oracle::kron(A, oracle::E(2, 2)), 1e-15));
}

TEST(Sta, EqualShapesAreOrdinarySums) {
  oracle::Rng rng(30);
  const HVec x = rng.vec(3), y = rng.vec(3);
  const Mat A = rng.mat(3, 3), B = rng.mat(3, 3);
  EXPECT_EQ(sta_vec(x, y, StaKind::VecBar), HVec(x + y));
  EXPECT_EQ(sta_vec(x, y, StaKind::VecHat, Sign::Minus), HVec(x - y));
  EXPECT_EQ(sta(A, B, StaKind::SqBar), Mat(A + B));
  EXPECT_EQ(sta(A, B, StaKind::SqHat), Mat(A + B));
  EXPECT_EQ(sta(A, B, StaKind::MatHat, Sign::Minus), Mat(A - B));
}

TEST(Sta, SquareKindsMatchOracle) {
  oracle::Rng rng(31);
  const Mat A = rng.mat(2, 2), B = rng.mat(3, 3);
  EXPECT_TRUE(near(sta(A, B, StaKind::SqBar),
                   oracle::kron(A, oracle::eye(3)) + oracle::kron(B, oracle::eye(2)), 1e-15));
  EXPECT_TRUE(near(sta(A, B, StaKind::SqHat, Sign::Minus),
                   oracle::kron(A, oracle::J(3)) - oracle::kron(B, oracle::J(2)), 1e-15));
}

TEST(Sta, CommutativeAssociativeWithZeroIdentities) {
  oracle::Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const HVec x = rng.vec(rng.dim(1, 4)), y = rng.vec(rng.dim(1, 4)), z = rng.vec(rng.dim(1, 4));
    for (auto kind : {StaKind::VecBar, StaKind::VecHat}) {
      EXPECT_TRUE(near(sta_vec(x, y, kind), sta_vec(y, x, kind)));
      EXPECT_TRUE(near(sta_vec(sta_vec(x, y, kind), z, kind), sta_vec(x, sta_vec(y, z, kind), kind)));
      const HVec zero = HVec::Zero(y.size());
      EXPECT_TRUE(near(sta_vec(x, zero, kind), stretch(x, oracle::lcm(x.size(), y.size()) / x.size(),
                                                   kind == StaKind::VecHat)));
    }
    const Mat A = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat B = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    const Mat C = rng.mat(rng.dim(1, 4), rng.dim(1, 4));
    EXPECT_TRUE(near(hat_add(A, B), hat_add(B, A)));
    EXPECT_TRUE(near(hat_add(hat_add(A, B), C), hat_add(A, hat_add(B, C))));
    const Mat S = rng.mat(A.rows(), A.rows()), T = rng.mat(B.rows(), B.rows());
    const Mat U = rng.mat(C.rows(), C.rows());
    for (auto kind : {StaKind::SqBar, StaKind::SqHat}) {
      EXPECT_TRUE(near(sta(S, T, kind), sta(T, S, kind)));
      EXPECT_TRUE(near(sta(sta(S, T, kind), U, kind), sta(S, sta(T, U, kind), kind)));
    }
  }
}

TEST(Sta, KindCarrierErrors) {
  const Mat A = Mat::Ones(2, 3);
  const Mat B = Mat::Ones(2, 2);
  EXPECT_THROW(sta(A, B, StaKind::SqBar), ShapeError);
  EXPECT_THROW(sta(A, B, StaKind::VecBar), ShapeError);
  EXPECT_THROW(sta_vec(HVec::Ones(2), HVec::Ones(3), StaKind::MatHat), ShapeError);
}
