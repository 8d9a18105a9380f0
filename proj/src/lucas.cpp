#include "padic/lucas.hpp"

#include <sstream>

#include "padic/combinatorics.hpp"
#include "padic/errors.hpp"
#include "padic/residue.hpp"

namespace padic {

namespace {

std::string poly_to_string(const IntPolynomial& p) {
  std::ostringstream os;
  os << "[";
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << " ";
    os << c[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

mpz_class lucas_u(const LucasParams& params, std::uint64_t n) {
  mpz_class prev = 0, cur = 1;  // u_0, u_1
  if (n == 0) return prev;
  for (std::uint64_t i = 1; i < n; ++i) {
    mpz_class next = params.A * cur - params.B * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial u_polynomial(std::uint64_t k) {
  IntPolynomial prev;                               // u_0 = 0
  IntPolynomial cur = IntPolynomial::constant(1);   // u_1 = 1
  if (k == 0) return prev;
  const IntPolynomial x = IntPolynomial::x();
  for (std::uint64_t i = 1; i < k; ++i) {
    IntPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

VerificationRecord check_identity_2_1(std::uint64_t n, std::int64_t d) {
  if (n < 1) throw bad_parameters_error("check_identity_2_1: n must be >= 1");
  const IntPolynomial x_minus_2({-2, 1});

  IntPolynomial lhs;
  for (std::uint64_t k = 0; k < n; ++k) {
    mpz_class b = binomial(2 * k, static_cast<std::int64_t>(k) + d);
    if (b == 0) continue;
    std::vector<mpz_class> mono(n - k);  // b * x^{n-1-k}
    mono.back() = b;
    lhs = lhs + IntPolynomial(std::move(mono));
  }
  if (d > 0) {
    std::vector<mpz_class> xn(n + 1);
    xn.back() = 1;
    lhs = lhs + IntPolynomial(std::move(xn)) *
                    u_polynomial(static_cast<std::uint64_t>(d)).compose(x_minus_2);
  }

  IntPolynomial rhs;
  const std::int64_t upper = static_cast<std::int64_t>(n) + d;
  for (std::int64_t k = 0; k < upper; ++k) {
    rhs = rhs + u_polynomial(static_cast<std::uint64_t>(upper - k)).compose(x_minus_2) *
                    binomial(2 * n, k);
  }

  VerificationRecord rec;
  rec.claim_id = "lem2.1/(2.1)";
  rec.param("n", static_cast<long long>(n)).param("d", d);
  if (lhs == rhs) {
    rec.status = RecordStatus::pass;
    rec.note("degree", std::to_string(lhs.degree()));
  } else {
    rec.status = RecordStatus::fail;
    rec.note("lhs", poly_to_string(lhs));
    rec.note("rhs", poly_to_string(rhs));
  }
  return rec;
}

VerificationRecord check_lemma_2_2(const LucasParams& params, std::uint64_t d, std::uint64_t n) {
  if (d < 1 || d % 2 == 0)
    throw bad_parameters_error("check_lemma_2_2: d must be a positive odd integer");
  const mpz_class delta = params.discriminant();
  if (delta != 0 && !mpz_divisible_ui_p(delta.get_mpz_t(), d))
    throw bad_parameters_error("check_lemma_2_2: d does not divide the discriminant");
  if (n < 1) throw bad_parameters_error("check_lemma_2_2: n must be >= 1");

  VerificationRecord rec;
  rec.claim_id = "lem2.2/(2.2)";
  rec.param("A", params.A.get_si())
      .param("B", params.B.get_si())
      .param("d", static_cast<long long>(d))
      .param("n", static_cast<long long>(n));

  if (d == 1) {
    rec.status = RecordStatus::vacuous;
    return rec;
  }

  mpq_class ratio(lucas_u(params, n), n);
  ratio.canonicalize();
  mpz_class den(ratio.get_den()), dz(static_cast<unsigned long>(d));
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), dz.get_mpz_t());
  if (g != 1) {
    // u_n/n failed to be d-integral, contradicting the congruence.
    rec.status = RecordStatus::fail;
    rec.note("u_n_over_n_denominator", den.get_str());
    return rec;
  }

  ResidueClass lhs = ResidueClass(mpz_class(ratio.get_num()), dz) * mod_inverse(den, dz);
  ResidueClass a_half = ResidueClass(params.A, dz) * mod_inverse(2, dz);
  ResidueClass rhs = a_half.pow(static_cast<long>(n) - 1);
  if (d % 3 == 0 && n % 3 == 0) {
    mpz_class third = delta / 3;
    rhs = rhs + a_half.pow(static_cast<long>(n) - 3) * ResidueClass(third, dz);
  }

  rec.status = lhs == rhs ? RecordStatus::pass : RecordStatus::fail;
  rec.note("lhs", lhs.value().get_str());
  rec.note("rhs", rhs.value().get_str());
  return rec;
}

}  // namespace padic
