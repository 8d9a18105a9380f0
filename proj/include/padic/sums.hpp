#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "padic/record.hpp"

namespace padic {

// Normalized central-binomial sum: m^{n-1} * sum_{k<n} binomial(2k,k)/m^k
// (plain) or with the alternating binomial weight.  Multiplying by m^{n-1}
// clears every denominator, so normalized_value is an exact integer and, for
// primes p not dividing m, carries the same p-adic valuation as the rational
// sum.
struct CentralSum {
  std::uint64_t n = 0;
  mpz_class m;
  mpz_class normalized_value;
  std::uint64_t normalization_exponent = 0;  // n - 1
};

struct MultinomialSum {
  std::uint64_t n = 0;
  unsigned h = 0;
  mpz_class value;
  bool alternating = false;
};

// sum_{k<n} binomial(2k,k) m^{n-1-k}, with binomial(2k,k) updated
// incrementally inside the loop.
CentralSum central_sum(std::uint64_t n, const mpz_class& m);

// sum_{k<n} binomial(n-1,k) (-1)^k binomial(2k,k) m^{n-1-k}.
CentralSum central_sum_alt(std::uint64_t n, const mpz_class& m);

// The first `count` equal-index multinomial coefficients (hk)!/(k!)^h.
std::vector<mpz_class> multinomial_values(unsigned h, std::uint64_t count);

MultinomialSum multinomial_sum(std::uint64_t n, unsigned h, bool alternating);

// Evaluates both sides of the binomial-transform identities
//   (1/n) sum_{k<n} M_k/m^k
//     = sum_{k=1}^n binomial(n-1,k-1) (-1)^{k-1}/k sum_{l<k} binomial(k-1,l)(-1)^l M_l/m^l
// and its inverse, as exact rationals, and additionally checks that the
// running minima of the two valuation sequences agree for each prime in
// `primes`.
VerificationRecord check_transform_2_5(std::uint64_t n, unsigned h, const mpz_class& m,
                                       const std::vector<std::uint64_t>& primes = {3, 5, 7});

// Constant term of prod_{i != j} (1 - x_i/x_j)^k by brute-force Laurent
// expansion; resource-guarded to h <= 4, k <= 3.
mpz_class dyson_constant_term(unsigned h, std::uint64_t k);

// sum_{k=1}^n binomial(n-1,k-1) (-1)^{k-1}/4^{k-1} binomial(2k-1,k-1) = C_{n-1}/4^{n-1}.
VerificationRecord check_sigma_identity(std::uint64_t n);

// sum_{k<n} (2 binomial(2n-1,k) - binomial(2n,k)) = binomial(2n-1,n-1).
VerificationRecord check_telescoping_sigma(std::uint64_t n);

}  // namespace padic
