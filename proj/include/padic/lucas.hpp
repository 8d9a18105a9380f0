#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "padic/polynomial.hpp"
#include "padic/record.hpp"

namespace padic {

// Parameters of the Lucas sequence u_{n+1} = A u_n - B u_{n-1}.
struct LucasParams {
  mpz_class A;
  mpz_class B;

  mpz_class discriminant() const { return A * A - 4 * B; }
};

// u_n(A, B) with u_0 = 0, u_1 = 1.
mpz_class lucas_u(const LucasParams& params, std::uint64_t n);

// Polynomial sequence u_0(x) = 0, u_1(x) = 1, u_{k+1}(x) = x u_k(x) - u_{k-1}(x);
// degree k-1 for k >= 1.
IntPolynomial u_polynomial(std::uint64_t k);

// Checks, coefficientwise in x, that
//   sum_{0<=k<n} binomial(2k, k+d) x^{n-1-k} + [d>0] x^n u_d(x-2)
//     = sum_{0<=k<n+d} binomial(2n, k) u_{n+d-k}(x-2).
VerificationRecord check_identity_2_1(std::uint64_t n, std::int64_t d);

// Checks the congruence
//   u_n(A,B)/n == (A/2)^{n-1} + [3|d][3|n] (A/2)^{n-3} Delta/3   (mod d)
// for odd d dividing Delta = A^2 - 4B.  The d-integrality of u_n/n is
// verified, not assumed.
VerificationRecord check_lemma_2_2(const LucasParams& params, std::uint64_t d, std::uint64_t n);

}  // namespace padic
