#include "padic/residue.hpp"

#include "padic/primality.hpp"

namespace padic {

ResidueClass::ResidueClass(mpz_class value, mpz_class modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
  if (modulus_ < 2) throw bad_parameters_error("ResidueClass: modulus must be >= 2");
  mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
}

void ResidueClass::require_same_modulus(const ResidueClass& rhs) const {
  if (modulus_ != rhs.modulus_)
    throw bad_parameters_error("ResidueClass: mixed-modulus arithmetic");
}

ResidueClass ResidueClass::operator+(const ResidueClass& rhs) const {
  require_same_modulus(rhs);
  return {value_ + rhs.value_, modulus_};
}

ResidueClass ResidueClass::operator-(const ResidueClass& rhs) const {
  require_same_modulus(rhs);
  return {value_ - rhs.value_, modulus_};
}

ResidueClass ResidueClass::operator*(const ResidueClass& rhs) const {
  require_same_modulus(rhs);
  return {value_ * rhs.value_, modulus_};
}

ResidueClass ResidueClass::pow(const mpz_class& exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class r;
  mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), exponent.get_mpz_t(), modulus_.get_mpz_t());
  return {r, modulus_};
}

ResidueClass ResidueClass::inverse() const { return mod_inverse(value_, modulus_); }

PrimePower::PrimePower(std::uint64_t prime, unsigned exp) : p(prime), exponent(exp) {
  require_prime(prime, "PrimePower");
  if (exp < 1) throw bad_parameters_error("PrimePower: exponent must be >= 1");
  mpz_ui_pow_ui(modulus.get_mpz_t(), prime, exp);
}

ResidueClass mod_inverse(const mpz_class& x, const mpz_class& modulus) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()))
    throw not_invertible_error("mod_inverse: gcd(x, modulus) != 1");
  return {r, modulus};
}

ResidueClass factorial_mod(std::uint64_t n, const mpz_class& modulus) {
  mpz_class acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    acc *= i;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
  }
  return {acc, modulus};
}

}  // namespace padic
