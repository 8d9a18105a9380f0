#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "padic/residue.hpp"

namespace padic {

// binomial(n, k); zero when k < 0 or k > n.
mpz_class binomial(const mpz_class& n, const mpz_class& k);
mpz_class binomial(std::uint64_t n, std::int64_t k);

// (hk)! / (k!)^h, the equal-index multinomial coefficient.
mpz_class multinomial_equal(unsigned h, std::uint64_t k);

// Catalan number C_k = binomial(2k, k) / (k + 1).
mpz_class catalan(std::uint64_t k);

// binomial(a, b) mod p by Lucas' theorem: the product of digitwise binomials.
ResidueClass lucas_binomial_mod_p(std::uint64_t a, std::uint64_t b, std::uint64_t p);

}  // namespace padic
