#include "padic/valuation.hpp"

#include "padic/primality.hpp"

namespace padic {

Valuation vp(const mpz_class& x, std::uint64_t p) {
  require_prime(p, "vp");
  if (x == 0) return Valuation::infinity();
  mpz_class reduced, prime(static_cast<unsigned long>(p));
  long e = static_cast<long>(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
  return Valuation::finite(e);
}

Valuation vp(const mpq_class& x, std::uint64_t p) {
  require_prime(p, "vp");
  if (x == 0) return Valuation::infinity();
  return Valuation::finite(vp(mpz_class(x.get_num()), p).value -
                           vp(mpz_class(x.get_den()), p).value);
}

long factorial_vp(std::uint64_t n, std::uint64_t p) {
  require_prime(p, "factorial_vp");
  long total = 0;
  while (n) {
    n /= p;
    total += static_cast<long>(n);
  }
  return total;
}

}  // namespace padic
