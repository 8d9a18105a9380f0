#include "padic/polynomial.hpp"

#include <algorithm>

namespace padic {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
  return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::x() { return IntPolynomial({0, 1}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < rhs.coeffs_.size()) out[i] += rhs.coeffs_[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  return *this + rhs * mpz_class(-1);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const mpz_class& scalar) const {
  std::vector<mpz_class> out(coeffs_);
  for (auto& c : out) c *= scalar;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + constant(*it);
  return acc;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace padic
