#include "dimfree/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "dimfree/errors.hpp"

namespace dimfree {

namespace {

constexpr Index kMaxDim = Index{1} << 62;

void require_positive(Index a, const char* what) {
  if (a < 1) throw DomainError(std::string(what) + " must be >= 1, got " + std::to_string(a));
}

}  // namespace

Index checked_mul(Index a, Index b) {
  require_positive(a, "factor");
  require_positive(b, "factor");
  if (a > kMaxDim / b) {
    throw OverflowError("dimension product " + std::to_string(a) + "*" + std::to_string(b) +
                        " exceeds 2^62");
  }
  return a * b;
}

LcmGcd lcm_gcd(Index a, Index b) {
  require_positive(a, "lcm_gcd argument");
  require_positive(b, "lcm_gcd argument");
  const Index g = std::gcd(a, b);
  return {checked_mul(a / g, b), g};
}

Index lcm(Index a, Index b) { return lcm_gcd(a, b).lcm; }
Index gcd(Index a, Index b) { return lcm_gcd(a, b).gcd; }

bool md1_precedes_eq(Index a, Index b) {
  require_positive(a, "md1 argument");
  require_positive(b, "md1 argument");
  return b % a == 0;
}

bool md1_precedes(Index a, Index b) { return a != b && md1_precedes_eq(a, b); }

void require_shape(Shape s) {
  if (s.rows < 1 || s.cols < 1) throw ShapeError("invalid shape " + to_string(s));
}

JoinMeet md2_join_meet(Shape s, Shape t) {
  require_shape(s);
  require_shape(t);
  const auto r = lcm_gcd(s.rows, t.rows);
  const auto c = lcm_gcd(s.cols, t.cols);
  return {{r.lcm, c.lcm}, {r.gcd, c.gcd}};
}

Shape join(Shape s, Shape t) { return md2_join_meet(s, t).join; }

std::vector<Index> divisors_ascending(Index n) {
  require_positive(n, "divisors_ascending argument");
  std::vector<Index> low, high;
  for (Index d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace dimfree
