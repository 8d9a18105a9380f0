#pragma once

#include <cstdint>
#include <compare>

#include <gmpxx.h>

namespace padic {

// p-adic order of a rational.  nu_p(0) is +infinity, kept as an explicit flag
// so that comparisons like "nu >= nu_p(n)" treat it as top.
struct Valuation {
  long value = 0;
  bool infinite = false;

  static Valuation infinity() { return {0, true}; }
  static Valuation finite(long v) { return {v, false}; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return a.infinite && b.infinite;
    return a.value == b.value;
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return a == b || a < b; }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return infinity();
    return finite(a.value + b.value);
  }

  friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }
};

// nu_p of an integer; p must be prime.
Valuation vp(const mpz_class& x, std::uint64_t p);

// nu_p(a/b) = nu_p(a) - nu_p(b); sign of x is ignored.
Valuation vp(const mpq_class& x, std::uint64_t p);

// Legendre's formula: nu_p(n!) = sum_{i>=1} floor(n/p^i).
long factorial_vp(std::uint64_t n, std::uint64_t p);

}  // namespace padic
