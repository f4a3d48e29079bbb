#pragma once

#include "charnum/rational.hpp"

namespace charnum {

// Bernoulli number B_n for even n >= 2 (the convention with B_2 = 1/6,
// B_4 = -1/30).  Throws std::invalid_argument for odd or non-positive n,
// where the value is degenerate (zero or convention-dependent).
Rational bernoulli(int n);

}  // namespace charnum
