#include "padic/sums.hpp"

#include <map>

#include "padic/combinatorics.hpp"
#include "padic/errors.hpp"
#include "padic/valuation.hpp"

namespace padic {

namespace {

void step_central_binomial(mpz_class& b, std::uint64_t k) {
  // binomial(2(k+1), k+1) = binomial(2k, k) * 2(2k+1)/(k+1)
  b *= 2 * (2 * k + 1);
  mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
}

}  // namespace

CentralSum central_sum(std::uint64_t n, const mpz_class& m) {
  if (n < 1 || m == 0) throw bad_parameters_error("central_sum: need n >= 1, m != 0");
  mpz_class acc = 0, b = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    acc = acc * m + b;
    step_central_binomial(b, k);
  }
  return {n, m, acc, n - 1};
}

CentralSum central_sum_alt(std::uint64_t n, const mpz_class& m) {
  if (n < 1 || m == 0) throw bad_parameters_error("central_sum_alt: need n >= 1, m != 0");
  mpz_class acc = 0, b = 1, row = 1;  // row = binomial(n-1, k)
  for (std::uint64_t k = 0; k < n; ++k) {
    mpz_class term = row * b;
    if (k % 2) term = -term;
    acc = acc * m + term;
    step_central_binomial(b, k);
    row *= (n - 1 - k);
    mpz_divexact_ui(row.get_mpz_t(), row.get_mpz_t(), k + 1);
  }
  return {n, m, acc, n - 1};
}

std::vector<mpz_class> multinomial_values(unsigned h, std::uint64_t count) {
  std::vector<mpz_class> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(multinomial_equal(h, k));
  return out;
}

MultinomialSum multinomial_sum(std::uint64_t n, unsigned h, bool alternating) {
  if (n < 1 || h < 1) throw bad_parameters_error("multinomial_sum: need n >= 1, h >= 1");
  const auto values = multinomial_values(h, n);
  mpz_class acc = 0, row = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (alternating) {
      mpz_class term = row * values[k];
      acc += (k % 2) ? -term : term;
      row *= (n - 1 - k);
      mpz_divexact_ui(row.get_mpz_t(), row.get_mpz_t(), k + 1);
    } else {
      acc += values[k];
    }
  }
  return {n, h, acc, alternating};
}

VerificationRecord check_transform_2_5(std::uint64_t n, unsigned h, const mpz_class& m,
                                       const std::vector<std::uint64_t>& primes) {
  if (n < 1 || h < 1 || m == 0)
    throw bad_parameters_error("check_transform_2_5: need n >= 1, h >= 1, m != 0");

  // a_l = M(h,l) / m^l
  std::vector<mpq_class> a(n);
  {
    mpq_class m_pow = 1;
    const auto values = multinomial_values(h, n);
    for (std::uint64_t l = 0; l < n; ++l) {
      a[l] = mpq_class(values[l]) / m_pow;
      a[l].canonicalize();
      m_pow *= m;
    }
  }

  // Inner sums for k = 1..n: plain_k = sum_{l<k} a_l,
  // alt_k = sum_{l<k} binomial(k-1,l)(-1)^l a_l.
  std::vector<mpq_class> plain(n + 1), alt(n + 1);
  for (std::uint64_t k = 1; k <= n; ++k) {
    plain[k] = plain[k - 1] + a[k - 1];
    mpq_class s = 0;
    for (std::uint64_t l = 0; l < k; ++l) {
      mpq_class t = mpq_class(binomial(k - 1, static_cast<std::int64_t>(l))) * a[l];
      s += (l % 2) ? -t : t;
    }
    alt[k] = s;
  }

  mpq_class lhs_25 = plain[n] / static_cast<long>(n);
  mpq_class rhs_25 = 0;
  mpq_class lhs_26 = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    mpq_class w = mpq_class(binomial(n - 1, static_cast<std::int64_t>(k - 1))) /
                  mpq_class(static_cast<long>(k));
    if (k % 2 == 0) w = -w;
    rhs_25 += w * alt[k];
    lhs_26 += w * plain[k];
  }
  mpq_class rhs_26 = alt[n] / static_cast<long>(n);

  VerificationRecord rec;
  rec.claim_id = "lem2.4";
  rec.param("n", static_cast<long long>(n))
      .param("h", h)
      .param("m", static_cast<long long>(m.get_si()));

  bool ok = lhs_25 == rhs_25 && lhs_26 == rhs_26;
  rec.note("eq_2_5", lhs_25 == rhs_25 ? "1" : "0");
  rec.note("eq_2_6", lhs_26 == rhs_26 ? "1" : "0");

  for (std::uint64_t p : primes) {
    Valuation min_plain = Valuation::infinity(), min_alt = Valuation::infinity();
    bool equal = true;
    for (std::uint64_t k = 1; k <= n; ++k) {
      min_plain = min(min_plain, vp(mpq_class(plain[k] / static_cast<long>(k)), p));
      min_alt = min(min_alt, vp(mpq_class(alt[k] / static_cast<long>(k)), p));
      if (!(min_plain == min_alt)) equal = false;
    }
    ok = ok && equal;
    rec.note("eq_2_4_p" + std::to_string(p), equal ? "1" : "0");
  }

  rec.status = ok ? RecordStatus::pass : RecordStatus::fail;
  return rec;
}

mpz_class dyson_constant_term(unsigned h, std::uint64_t k) {
  if (h < 1) throw bad_parameters_error("dyson_constant_term: h must be >= 1");
  if (h > 4 || k > 3)
    throw resource_guard_error("dyson_constant_term: brute force capped at h <= 4, k <= 3");

  using Monomial = std::vector<int>;  // exponent of each variable
  std::map<Monomial, mpz_class> poly;
  poly[Monomial(h, 0)] = 1;

  for (unsigned i = 0; i < h; ++i)
    for (unsigned j = 0; j < h; ++j) {
      if (i == j) continue;
      for (std::uint64_t rep = 0; rep < k; ++rep) {
        // multiply by (1 - x_i / x_j)
        std::map<Monomial, mpz_class> next;
        for (const auto& [mono, coef] : poly) {
          next[mono] += coef;
          Monomial shifted = mono;
          ++shifted[i];
          --shifted[j];
          next[shifted] -= coef;
        }
        poly = std::move(next);
      }
    }

  auto it = poly.find(Monomial(h, 0));
  return it == poly.end() ? mpz_class(0) : it->second;
}

VerificationRecord check_sigma_identity(std::uint64_t n) {
  if (n < 1) throw bad_parameters_error("check_sigma_identity: n must be >= 1");
  mpq_class lhs = 0, four_pow = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    mpq_class term = mpq_class(binomial(n - 1, static_cast<std::int64_t>(k - 1)) *
                               binomial(2 * k - 1, static_cast<std::int64_t>(k - 1))) /
                     four_pow;
    lhs += (k % 2) ? term : -term;
    four_pow *= 4;
  }
  mpq_class rhs = mpq_class(catalan(n - 1));
  for (std::uint64_t i = 1; i < n; ++i) rhs /= 4;

  VerificationRecord rec;
  rec.claim_id = "sec3/sigma";
  rec.param("n", static_cast<long long>(n));
  rec.status = lhs == rhs ? RecordStatus::pass : RecordStatus::fail;
  rec.note("lhs", lhs.get_str());
  rec.note("rhs", rhs.get_str());
  return rec;
}

VerificationRecord check_telescoping_sigma(std::uint64_t n) {
  if (n < 1) throw bad_parameters_error("check_telescoping_sigma: n must be >= 1");
  mpz_class sum = 0;
  for (std::uint64_t k = 0; k < n; ++k)
    sum += 2 * binomial(2 * n - 1, static_cast<std::int64_t>(k)) -
           binomial(2 * n, static_cast<std::int64_t>(k));
  mpz_class expected = binomial(2 * n - 1, static_cast<std::int64_t>(n - 1));

  VerificationRecord rec;
  rec.claim_id = "sec3/telescoping";
  rec.param("n", static_cast<long long>(n));
  rec.status = sum == expected ? RecordStatus::pass : RecordStatus::fail;
  rec.note("lhs", sum.get_str());
  rec.note("rhs", expected.get_str());
  return rec;
}

}  // namespace padic
