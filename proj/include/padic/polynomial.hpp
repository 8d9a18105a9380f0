#pragma once

#include <vector>

#include <gmpxx.h>

namespace padic {

// Dense univariate polynomial over Z, coefficients in ascending degree.
// The zero polynomial has an empty coefficient vector.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial x();  // the monomial x

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const mpz_class& scalar) const;

  // Exact composition: (*this)(inner(x)), by Horner over polynomials.
  IntPolynomial compose(const IntPolynomial& inner) const;

  mpz_class evaluate(const mpz_class& x) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

}  // namespace padic
