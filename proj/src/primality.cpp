#include "padic/primality.hpp"

namespace padic {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128(a) * b) % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool witness_composite(u64 a, u64 d, unsigned s, u64 n) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for all n < 2^64 (Sinclair/Jaeschke style base set).
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (witness_composite(a, d, s, n)) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 0) return false;
  if (!n.fits_ulong_p() && mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
    throw resource_guard_error("primality check limited to 64-bit inputs");
  return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
}

void require_prime(std::uint64_t p, const char* context) {
  if (!is_prime_u64(p))
    throw bad_parameters_error(std::string(context) + ": " + std::to_string(p) + " is not prime");
}

}  // namespace padic
