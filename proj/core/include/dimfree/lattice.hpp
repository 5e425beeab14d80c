#pragma once

#include <vector>

#include "dimfree/types.hpp"

namespace dimfree {

struct LcmGcd {
  Index lcm;
  Index gcd;
};

// Throws DomainError for arguments < 1 and OverflowError when lcm > 2^62.
LcmGcd lcm_gcd(Index a, Index b);
Index lcm(Index a, Index b);
Index gcd(Index a, Index b);

// a | b and a != b.
bool md1_precedes(Index a, Index b);
// a | b.
bool md1_precedes_eq(Index a, Index b);

struct JoinMeet {
  Shape join;
  Shape meet;
};

JoinMeet md2_join_meet(Shape s, Shape t);
Shape join(Shape s, Shape t);

std::vector<Index> divisors_ascending(Index n);

// a * b with the same 2^62 ceiling as lcm.
Index checked_mul(Index a, Index b);

void require_shape(Shape s);

}  // namespace dimfree
