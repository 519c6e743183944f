#pragma once

#include <cstdint>

#include "polyspace/rational.hpp"

namespace polyspace {

/// m(m-1)...(m-k+1)/k! for any integer m and k >= 0.
/// Throws std::invalid_argument for k < 0.
BigInt binom_int(std::int64_t m, std::int64_t k);

/// Parity of binom_int(m, k): Lucas digit test for m >= 0, and
/// binom(m, k) = (-1)^k binom(k-m-1, k) for m < 0.
bool binom_mod2(std::int64_t m, std::int64_t k);

}  // namespace polyspace
