#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "padic/record.hpp"

namespace padic {

// Largest bound accepted by search_special_primes.
inline constexpr std::uint64_t kSpecialPrimeSearchCap = 1000000;

// Largest m accepted by primality_via_1_18 on the exact path.
inline constexpr std::uint64_t kPrimalityCriterionCap = 60;

struct SpecialPrimeHit {
  std::uint64_t p = 0;
  bool via_factorial = false;       // (p-2)! == 1 (mod p^2)
  bool direct_sum_checked = false;  // cross-check path ran
  bool via_direct_sum = false;      // sum_{k<p} M(p-1,k) == 0 (mod p^2)
};

// Theorem: for odd prime p | m-4,
//   nu_p(sum_{k<n} binomial(2k,k)/m^k) >= nu_p(n)  (and the alternating sum),
//   (1/n) sum ... == binomial(2n-1,n-1)/4^{n-1} + 3-adic correction  (mod p^{nu_p(m-4)}),
//   (1/n) alt sum ... == C_{n-1}/4^{n-1}  (mod p^{nu_p(m-4) - [p=3]}).
// One record per numbered congruence.
std::vector<VerificationRecord> check_theorem_1_1(std::uint64_t n, const mpz_class& m,
                                                  std::uint64_t p);

// The n = p^a specializations: (1/p^a) sum == (m-1)/3 (mod p) and, for p != 3,
// (1/p^a) alt sum == -1 (mod p).
std::vector<VerificationRecord> check_1_4_and_1_5(std::uint64_t p, unsigned a, const mpz_class& m);

// Corollaries 1.1-1.4: (1.6) valuation bound for prime divisors of 4m-1,
// (1.7) divisibility by |4m-1|, (1.8)/(1.9) prime-power congruences,
// (1.10)-(1.12) the explicit (m, modulus) families.
std::vector<VerificationRecord> check_corollaries(long m_min, long m_max,
                                                  const std::vector<std::uint64_t>& p_set,
                                                  unsigned a_max, std::uint64_t n_max_1_6 = 60);

// sum_{k<p} M(p-1,k) == p B_{p-1} + (-1)^{p-1} - 2p (mod p^2).
VerificationRecord check_theorem_1_2_i(std::uint64_t p);

// m > 1 is prime iff sum_{k<m} M(m-1,k) == 0 (mod m).
bool primality_via_1_18(std::uint64_t m);

// Predicts sum_{k<n} M(p-1,k) mod p from the base-p digits of n and compares
// with the exact sum.  `precomputed_sum`, when given, must equal the exact
// plain multinomial sum for (n, p-1).
VerificationRecord classify_theorem_1_2_ii(std::uint64_t n, std::uint64_t p);
VerificationRecord classify_theorem_1_2_ii(std::uint64_t n, std::uint64_t p,
                                           const mpz_class& precomputed_sum);

// prod_{j=1}^{p-1} binomial(jn, n) mod p against the digit-based prediction.
VerificationRecord lemma_4_1_product(std::uint64_t n, std::uint64_t p);

// M(p-1, 2) == -p (mod p^2).
VerificationRecord check_binom_2p2_minus_p(std::uint64_t p);

// Odd primes p < bound with (p-2)! == 1 (mod p^2); cross-checks the direct
// multinomial sum mod p^2 for p <= 107.
std::vector<SpecialPrimeHit> search_special_primes(std::uint64_t bound, unsigned workers = 1);

// Falsification scans; failures only (empty result = clean range).
std::vector<VerificationRecord> scan_conjecture_1_1(const mpz_class& m, std::uint64_t n_max,
                                                    unsigned a_max);
std::vector<VerificationRecord> scan_conjecture_1_2(std::uint64_t p, std::uint64_t n_max);

// nu_3(sum_{k<n} binomial(2k,k)) == 2 nu_3(n) + nu_3(binomial(2n,n)).
VerificationRecord check_ssz(std::uint64_t n);
VerificationRecord check_ssz(std::uint64_t n, const mpz_class& precomputed_sum);

}  // namespace padic
