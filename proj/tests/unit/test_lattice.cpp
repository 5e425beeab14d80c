#include <gtest/gtest.h>

#include "dimfree/errors.hpp"
#include "dimfree/lattice.hpp"

using namespace dimfree;

TEST(Lattice, LcmGcdBasics) {
  EXPECT_EQ(lcm_gcd(4, 6).lcm, 12);
  EXPECT_EQ(lcm_gcd(4, 6).gcd, 2);
  EXPECT_EQ(lcm_gcd(7, 7).lcm, 7);
  EXPECT_EQ(lcm_gcd(7, 7).gcd, 7);
  EXPECT_EQ(lcm_gcd(3, 2).lcm, 6);
  EXPECT_EQ(lcm_gcd(3, 2).gcd, 1);
}

TEST(Lattice, LcmTimesGcdIsProduct) {
  for (Index a = 1; a <= 40; ++a)
    for (Index b = 1; b <= 40; ++b) {
      const auto r = lcm_gcd(a, b);
      EXPECT_EQ(r.lcm * r.gcd, a * b);
    }
}

TEST(Lattice, Absorption) {
  for (Index a = 1; a <= 30; ++a)
    for (Index b = 1; b <= 30; ++b) {
      EXPECT_EQ(gcd(a, lcm(a, b)), a);
      EXPECT_EQ(lcm(a, gcd(a, b)), a);
    }
}

TEST(Lattice, OrderConsistency) {
  for (Index a = 1; a <= 30; ++a)
    for (Index b = 1; b <= 30; ++b) {
      const bool le = md1_precedes_eq(a, b);
      EXPECT_EQ(le, lcm(a, b) == b);
      EXPECT_EQ(le, gcd(a, b) == a);
      EXPECT_EQ(md1_precedes(a, b), le && a != b);
    }
}

TEST(Lattice, StrictAndReflexive) {
  EXPECT_TRUE(md1_precedes(2, 6));
  EXPECT_FALSE(md1_precedes(4, 6));
  EXPECT_FALSE(md1_precedes(5, 5));
  EXPECT_TRUE(md1_precedes_eq(5, 5));
}

TEST(Lattice, JoinMeet) {
  auto r = md2_join_meet({2, 3}, {4, 2});
  EXPECT_EQ(r.join, (Shape{4, 6}));
  EXPECT_EQ(r.meet, (Shape{2, 1}));
  r = md2_join_meet({2, 4}, {4, 2});
  EXPECT_EQ(r.join, (Shape{4, 4}));
  EXPECT_EQ(r.meet, (Shape{2, 2}));
  r = md2_join_meet({3, 5}, {3, 5});
  EXPECT_EQ(r.join, (Shape{3, 5}));
  EXPECT_EQ(r.meet, (Shape{3, 5}));
}

TEST(Lattice, JoinMeetIsComponentwise) {
  for (Index a = 1; a <= 8; ++a)
    for (Index b = 1; b <= 8; ++b)
      for (Index c = 1; c <= 8; ++c)
        for (Index d = 1; d <= 8; ++d) {
          const auto r = md2_join_meet({a, c}, {b, d});
          EXPECT_EQ(r.join, (Shape{lcm(a, b), lcm(c, d)}));
          EXPECT_EQ(r.meet, (Shape{gcd(a, b), gcd(c, d)}));
        }
}

TEST(Lattice, Divisors) {
  EXPECT_EQ(divisors_ascending(12), (std::vector<Index>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors_ascending(1), (std::vector<Index>{1}));
  EXPECT_EQ(divisors_ascending(36), (std::vector<Index>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
  EXPECT_EQ(divisors_ascending(49), (std::vector<Index>{1, 7, 49}));
}

TEST(Lattice, OverflowIsAnError) {
  const Index big = Index{1} << 40;
  EXPECT_THROW(lcm(big, big - 1), OverflowError);
  EXPECT_NO_THROW(lcm(big, big));
}

TEST(Lattice, NonPositiveArgumentsAreRejected) {
  EXPECT_THROW(lcm_gcd(0, 3), DomainError);
  EXPECT_THROW(md1_precedes(-1, 3), DomainError);
  EXPECT_THROW(divisors_ascending(0), DomainError);
}
