#include "padic/digits.hpp"

#include "padic/primality.hpp"

namespace padic {

DigitVector digits_base_p(std::uint64_t n, std::uint64_t p) {
  require_prime(p, "digits_base_p");
  DigitVector dv;
  dv.base = p;
  while (n) {
    dv.digits.push_back(n % p);
    dv.digit_sum += n % p;
    n /= p;
  }
  return dv;
}

std::uint64_t digit_sum_base_p(std::uint64_t n, std::uint64_t p) {
  return digits_base_p(n, p).digit_sum;
}

}  // namespace padic
