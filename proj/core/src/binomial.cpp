#include "polyspace/binomial.hpp"

#include <stdexcept>

namespace polyspace {

BigInt binom_int(std::int64_t m, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("binomial lower index must be nonnegative");
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    num *= BigInt(static_cast<long>(m - j));
    den *= BigInt(static_cast<long>(j + 1));
  }
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

bool binom_mod2(std::int64_t m, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("binomial lower index must be nonnegative");
  if (m < 0) m = k - m - 1;
  // Lucas: odd iff every binary digit of k is at most the digit of m.
  return (static_cast<std::uint64_t>(k) & ~static_cast<std::uint64_t>(m)) == 0;
}

}  // namespace polyspace
