#pragma once

#include <cstdint>
#include <vector>

namespace padic {

// Base-p expansion, least-significant digit first.  Empty for n = 0.
struct DigitVector {
  std::uint64_t base = 0;
  std::vector<std::uint64_t> digits;
  std::uint64_t digit_sum = 0;  // psi_p(n)

  bool all_digits_at_most_one() const {
    for (auto d : digits)
      if (d > 1) return false;
    return true;
  }
};

DigitVector digits_base_p(std::uint64_t n, std::uint64_t p);

// psi_p(n), the sum of the base-p digits.
std::uint64_t digit_sum_base_p(std::uint64_t n, std::uint64_t p);

}  // namespace padic
