#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "padic/errors.hpp"

namespace padic {

// A value together with its modulus, normalized to [0, modulus).
// Arithmetic across different moduli is rejected.
class ResidueClass {
public:
  ResidueClass(mpz_class value, mpz_class modulus);

  const mpz_class& value() const { return value_; }
  const mpz_class& modulus() const { return modulus_; }

  ResidueClass operator+(const ResidueClass& rhs) const;
  ResidueClass operator-(const ResidueClass& rhs) const;
  ResidueClass operator*(const ResidueClass& rhs) const;
  ResidueClass pow(const mpz_class& exponent) const;  // negative exponents via inverse
  ResidueClass inverse() const;

  friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

private:
  void require_same_modulus(const ResidueClass& rhs) const;

  mpz_class value_;
  mpz_class modulus_;
};

// p^exponent with p checked prime at construction.
struct PrimePower {
  std::uint64_t p;
  unsigned exponent;
  mpz_class modulus;

  PrimePower(std::uint64_t prime, unsigned exp);
};

// y with x*y == 1 (mod modulus); throws not_invertible_error when gcd(x, modulus) != 1.
ResidueClass mod_inverse(const mpz_class& x, const mpz_class& modulus);

// n! mod modulus by a plain sequential product.
ResidueClass factorial_mod(std::uint64_t n, const mpz_class& modulus);

}  // namespace padic
