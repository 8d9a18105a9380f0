#include "padic/combinatorics.hpp"

#include "padic/digits.hpp"
#include "padic/primality.hpp"

namespace padic {

mpz_class binomial(const mpz_class& n, const mpz_class& k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), mpz_get_ui(k.get_mpz_t()));
  return r;
}

mpz_class binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<std::uint64_t>(k));
  return r;
}

mpz_class multinomial_equal(unsigned h, std::uint64_t k) {
  if (h < 1) throw bad_parameters_error("multinomial_equal: h must be >= 1");
  // (hk)!/(k!)^h = prod_{j=1}^{h} binomial(jk, k)
  mpz_class acc = 1;
  for (unsigned j = 2; j <= h; ++j) acc *= binomial(j * k, static_cast<std::int64_t>(k));
  return acc;
}

mpz_class catalan(std::uint64_t k) {
  mpz_class c = binomial(2 * k, static_cast<std::int64_t>(k));
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  return c;
}

ResidueClass lucas_binomial_mod_p(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  require_prime(p, "lucas_binomial_mod_p");
  mpz_class acc = 1;
  while ((a || b) && acc != 0) {
    acc *= binomial(a % p, static_cast<std::int64_t>(b % p));
    a /= p;
    b /= p;
  }
  return {acc, mpz_class(static_cast<unsigned long>(p))};
}

}  // namespace padic
