#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "padic/residue.hpp"

namespace padic {

// Largest index for which exact Bernoulli numbers are computed.
inline constexpr unsigned kBernoulliBound = 300;

// Exact B_n from the recurrence sum_{k=0}^{n} binomial(n+1,k) B_k = 0, B_0 = 1.
// Convention B_1 = -1/2.
mpq_class bernoulli(unsigned n);

// p * B_{p-1} reduced mod p^2 for an odd prime p.  Von Staudt-Clausen gives
// nu_p of B_{p-1}'s denominator as exactly 1, so p*B_{p-1} is a p-adic unit
// ratio N/D with p not dividing D; anything else is an arithmetic bug.
ResidueClass p_bernoulli_mod_p2(std::uint64_t p);

}  // namespace padic
