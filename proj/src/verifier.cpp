#include "padic/verifier.hpp"

#include <atomic>
#include <thread>

#include "padic/bernoulli.hpp"
#include "padic/combinatorics.hpp"
#include "padic/digits.hpp"
#include "padic/errors.hpp"
#include "padic/primality.hpp"
#include "padic/residue.hpp"
#include "padic/sums.hpp"
#include "padic/valuation.hpp"

namespace padic {

namespace {

mpz_class pow_ui(std::uint64_t base, std::uint64_t exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

mpz_class mod(const mpz_class& x, const mpz_class& modulus) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::string vp_to_string(const Valuation& v) {
  return v.infinite ? "inf" : std::to_string(v.value);
}

void require_theorem_1_1_params(const mpz_class& m, std::uint64_t p) {
  require_prime(p, "check_theorem_1_1");
  if (p == 2) throw bad_parameters_error("check_theorem_1_1: p must be odd");
  if (m == 4) throw bad_parameters_error("check_theorem_1_1: m = 4 gives an infinite modulus");
  mpz_class m4 = m - 4;
  if (!mpz_divisible_ui_p(m4.get_mpz_t(), p))
    throw bad_parameters_error("check_theorem_1_1: p does not divide m - 4");
}

// (1/n) * lhs_rational == rhs (mod p^e), with lhs_rational = S / m^{n-1},
// rewritten as S == n * m^{n-1} * rhs (mod p^{e + nu_p(n)}).
struct ClearedCongruence {
  mpz_class modulus;
  mpz_class lhs;  // S mod modulus
  mpz_class scale;  // n * m^{n-1} mod modulus

  ClearedCongruence(const mpz_class& s, std::uint64_t n, const mpz_class& m, std::uint64_t p,
                    long e) {
    long t = vp(mpz_class(static_cast<unsigned long>(n)), p).value;
    modulus = pow_ui(p, static_cast<std::uint64_t>(e + t));
    lhs = mod(s, modulus);
    mpz_class mpow;
    mpz_powm(mpow.get_mpz_t(), mod(m, modulus).get_mpz_t(),
             mpz_class(static_cast<unsigned long>(n - 1)).get_mpz_t(), modulus.get_mpz_t());
    scale = mod(n * mpow, modulus);
  }

  mpz_class rhs(const mpz_class& unnormalized_rhs) const {
    return mod(scale * unnormalized_rhs, modulus);
  }
};

mpz_class inverse_pow4(std::uint64_t n, const mpz_class& modulus) {
  // inverse of 4^{n-1} mod an odd prime power
  mpz_class inv4 = mod_inverse(4, modulus).value(), r;
  mpz_powm(r.get_mpz_t(), inv4.get_mpz_t(),
           mpz_class(static_cast<unsigned long>(n - 1)).get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// sum_{k<n} binomial(2k,k) m^k  (the corollary-side sums, no normalization)
mpz_class corollary_sum(std::uint64_t n, const mpz_class& m) {
  mpz_class acc = 0, b = 1, mpow = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    acc += b * mpow;
    mpow *= m;
    b *= 2 * (2 * k + 1);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
  }
  return acc;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<bool> sieve(bound, true);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (!sieve[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) sieve[j] = false;
  }
  return primes;
}

// (p-2)! mod p^2 in machine words; p^2 must fit 63 bits.
bool special_prime_fast_path(std::uint64_t p) {
  if (p >= 3037000499ull) {  // p^2 would overflow; exact fallback
    mpz_class p2 = pow_ui(p, 2);
    return factorial_mod(p - 2, p2).value() == 1;
  }
  const std::uint64_t p2 = p * p;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 2; i <= p - 2; ++i)
    acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * i) % p2);
  return acc == 1;
}

}  // namespace

std::vector<VerificationRecord> check_theorem_1_1(std::uint64_t n, const mpz_class& m,
                                                  std::uint64_t p) {
  require_theorem_1_1_params(m, p);
  if (n < 1) throw bad_parameters_error("check_theorem_1_1: n must be >= 1");

  const long e = vp(mpz_class(m - 4), p).value;
  const long t = vp(mpz_class(static_cast<unsigned long>(n)), p).value;
  const mpz_class s_plain = central_sum(n, m).normalized_value;
  const mpz_class s_alt = central_sum_alt(n, m).normalized_value;
  const long long mm = m.get_si();

  std::vector<VerificationRecord> out;

  {
    VerificationRecord rec;
    rec.claim_id = "thm1.1/(1.1)";
    rec.param("n", static_cast<long long>(n)).param("m", mm).param("p", static_cast<long long>(p));
    Valuation bound = Valuation::finite(t);
    Valuation v_plain = vp(s_plain, p), v_alt = vp(s_alt, p);
    rec.status = (v_plain >= bound && v_alt >= bound) ? RecordStatus::pass : RecordStatus::fail;
    rec.note("lhs_vp", vp_to_string(v_plain));
    rec.note("alt_vp", vp_to_string(v_alt));
    rec.note("bound", std::to_string(t));
    out.push_back(std::move(rec));
  }

  {
    VerificationRecord rec;
    rec.claim_id = "thm1.1/(1.2)";
    rec.param("n", static_cast<long long>(n)).param("m", mm).param("p", static_cast<long long>(p));
    ClearedCongruence cc(s_plain, n, m, p, e);
    mpz_class rhs_core =
        binomial(2 * n - 1, static_cast<std::int64_t>(n - 1)) * inverse_pow4(n, cc.modulus);
    if (p == 3 && n % 3 == 0) {
      std::uint64_t q = n;
      while (q % 3 == 0) q /= 3;
      mpz_class third = (m - 4) / 3;
      rhs_core += third * binomial(2 * q - 1, static_cast<std::int64_t>(q - 1));
    }
    mpz_class rhs = cc.rhs(rhs_core);
    rec.status = cc.lhs == rhs ? RecordStatus::pass : RecordStatus::fail;
    rec.note("lhs", cc.lhs.get_str());
    rec.note("rhs", rhs.get_str());
    rec.note("modulus", cc.modulus.get_str());
    out.push_back(std::move(rec));
  }

  {
    VerificationRecord rec;
    rec.claim_id = "thm1.1/(1.3)";
    rec.param("n", static_cast<long long>(n)).param("m", mm).param("p", static_cast<long long>(p));
    const long e3 = e - (p == 3 ? 1 : 0);
    if (e3 <= 0) {
      rec.status = RecordStatus::vacuous;
    } else {
      ClearedCongruence cc(s_alt, n, m, p, e3);
      mpz_class rhs = cc.rhs(catalan(n - 1) * inverse_pow4(n, cc.modulus));
      rec.status = cc.lhs == rhs ? RecordStatus::pass : RecordStatus::fail;
      rec.note("lhs", cc.lhs.get_str());
      rec.note("rhs", rhs.get_str());
      rec.note("modulus", cc.modulus.get_str());
    }
    out.push_back(std::move(rec));
  }

  return out;
}

std::vector<VerificationRecord> check_1_4_and_1_5(std::uint64_t p, unsigned a, const mpz_class& m) {
  require_theorem_1_1_params(m, p);
  if (a < 1) throw bad_parameters_error("check_1_4_and_1_5: a must be >= 1");

  const std::uint64_t n = mpz_get_ui(pow_ui(p, a).get_mpz_t());
  const mpz_class modulus = pow_ui(p, a + 1);
  const long long mm = m.get_si();

  std::vector<VerificationRecord> out;

  {
    // (1/p^a) sum == (m-1)/3 (mod p), cleared to mod p^{a+1}
    VerificationRecord rec;
    rec.claim_id = "thm1.1/(1.4)";
    rec.param("p", static_cast<long long>(p)).param("a", a).param("m", mm);
    mpz_class s = central_sum(n, m).normalized_value;
    mpz_class m_1_over_3;
    if (mpz_divisible_ui_p(mpz_class(m - 1).get_mpz_t(), 3))
      m_1_over_3 = (m - 1) / 3;
    else
      m_1_over_3 = (m - 1) * mod_inverse(3, modulus).value();
    mpz_class mpow;
    mpz_powm(mpow.get_mpz_t(), mod(m, modulus).get_mpz_t(),
             mpz_class(static_cast<unsigned long>(n - 1)).get_mpz_t(), modulus.get_mpz_t());
    mpz_class rhs = mod(pow_ui(p, a) * mpow * m_1_over_3, modulus);
    mpz_class lhs = mod(s, modulus);
    rec.status = lhs == rhs ? RecordStatus::pass : RecordStatus::fail;
    rec.note("lhs", lhs.get_str());
    rec.note("rhs", rhs.get_str());
    rec.note("modulus", modulus.get_str());
    out.push_back(std::move(rec));
  }

  {
    // (1/p^a) alternating sum == -1 (mod p), p != 3
    VerificationRecord rec;
    rec.claim_id = "thm1.1/(1.5)";
    rec.param("p", static_cast<long long>(p)).param("a", a).param("m", mm);
    if (p == 3) {
      rec.status = RecordStatus::vacuous;
    } else {
      mpz_class s = central_sum_alt(n, m).normalized_value;
      mpz_class mpow;
      mpz_powm(mpow.get_mpz_t(), mod(m, modulus).get_mpz_t(),
               mpz_class(static_cast<unsigned long>(n - 1)).get_mpz_t(), modulus.get_mpz_t());
      mpz_class rhs = mod(-pow_ui(p, a) * mpow, modulus);
      mpz_class lhs = mod(s, modulus);
      rec.status = lhs == rhs ? RecordStatus::pass : RecordStatus::fail;
      rec.note("lhs", lhs.get_str());
      rec.note("rhs", rhs.get_str());
      rec.note("modulus", modulus.get_str());
    }
    out.push_back(std::move(rec));
  }

  return out;
}

std::vector<VerificationRecord> check_corollaries(long m_min, long m_max,
                                                  const std::vector<std::uint64_t>& p_set,
                                                  unsigned a_max, std::uint64_t n_max_1_6) {
  std::vector<VerificationRecord> out;

  for (long m = m_min; m <= m_max; ++m) {
    if (m == 0) continue;
    const std::uint64_t abs_4m_1 = static_cast<std::uint64_t>(std::abs(4 * m - 1));

    // (1.6): nu_p bound for every prime divisor of 4m-1
    for (std::uint64_t p : prime_factors_u64(abs_4m_1)) {
      VerificationRecord rec;
      rec.claim_id = "cor1.1/(1.6)";
      rec.param("m", m).param("p", static_cast<long long>(p))
          .param("n_max", static_cast<long long>(n_max_1_6));
      rec.status = RecordStatus::pass;
      mpz_class acc = 0, b = 1, mpow = 1;
      for (std::uint64_t n = 1; n <= n_max_1_6; ++n) {
        acc += b * mpow;
        Valuation v = vp(acc, p);
        long tn = vp(mpz_class(static_cast<unsigned long>(n)), p).value;
        if (!(v >= Valuation::finite(tn))) {
          rec.status = RecordStatus::fail;
          rec.note("n", std::to_string(n));
          rec.note("lhs_vp", vp_to_string(v));
          rec.note("bound", std::to_string(tn));
          break;
        }
        mpow *= m;
        b *= 2 * (2 * n - 1);
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), n);
      }
      out.push_back(std::move(rec));
    }

    // (1.7): divisibility by n = |4m-1|
    {
      VerificationRecord rec;
      rec.claim_id = "cor1.2/(1.7)";
      rec.param("m", m);
      mpz_class s = corollary_sum(abs_4m_1, mpz_class(m));
      mpz_class r = mod(s, mpz_class(static_cast<unsigned long>(abs_4m_1)));
      rec.status = r == 0 ? RecordStatus::pass : RecordStatus::fail;
      rec.note("residue", r.get_str());
      rec.note("modulus", std::to_string(abs_4m_1));
      out.push_back(std::move(rec));
    }
  }

  // (1.8): p > 3, m = (1 - (-1)^{(p-1)/2} p)/4
  for (std::uint64_t p : p_set) {
    require_prime(p, "check_corollaries");
    if (p <= 3) throw bad_parameters_error("check_corollaries: (1.8) needs p > 3");
    long sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
    mpz_class m18 = (1 - sign * mpz_class(static_cast<unsigned long>(p))) / 4;
    for (unsigned a = 1; a <= a_max; ++a) {
      VerificationRecord rec;
      rec.claim_id = "cor1.3/(1.8)";
      rec.param("p", static_cast<long long>(p)).param("a", a);
      mpz_class modulus = pow_ui(p, a + 1);
      mpz_class s = corollary_sum(mpz_get_ui(pow_ui(p, a).get_mpz_t()), m18);
      mpz_class lhs = mod(s, modulus), rhs = mod(pow_ui(p, a), modulus);
      rec.status = lhs == rhs ? RecordStatus::pass : RecordStatus::fail;
      rec.note("lhs", lhs.get_str());
      rec.note("rhs", rhs.get_str());
      rec.note("modulus", modulus.get_str());
      out.push_back(std::move(rec));
    }
  }

  // (1.9): the p = 5 specialization with m = -1
  for (unsigned a = 1; a <= a_max; ++a) {
    VerificationRecord rec;
    rec.claim_id = "cor1.3/(1.9)";
    rec.param("a", a);
    mpz_class modulus = pow_ui(5, a + 1);
    mpz_class s = corollary_sum(mpz_get_ui(pow_ui(5, a).get_mpz_t()), mpz_class(-1));
    mpz_class lhs = mod(s, modulus), rhs = mod(pow_ui(5, a), modulus);
    rec.status = lhs == rhs ? RecordStatus::pass : RecordStatus::fail;
    rec.note("lhs", lhs.get_str());
    rec.note("rhs", rhs.get_str());
    out.push_back(std::move(rec));
  }

  // (1.10)-(1.12)
  struct Family {
    const char* claim;
    long m;
    std::uint64_t p;
    int sign;  // expected sign of p^a
  };
  for (const Family& f : {Family{"cor1.4/(1.10)", -2, 3, 1}, Family{"cor1.4/(1.11)", -5, 3, -1},
                          Family{"cor1.4/(1.12)", -5, 7, 1}}) {
    for (unsigned a = 1; a <= a_max; ++a) {
      VerificationRecord rec;
      rec.claim_id = f.claim;
      rec.param("a", a);
      mpz_class modulus = pow_ui(f.p, a + 1);
      mpz_class s = corollary_sum(mpz_get_ui(pow_ui(f.p, a).get_mpz_t()), mpz_class(f.m));
      mpz_class lhs = mod(s, modulus), rhs = mod(f.sign * pow_ui(f.p, a), modulus);
      rec.status = lhs == rhs ? RecordStatus::pass : RecordStatus::fail;
      rec.note("lhs", lhs.get_str());
      rec.note("rhs", rhs.get_str());
      out.push_back(std::move(rec));
    }
  }

  return out;
}

VerificationRecord check_theorem_1_2_i(std::uint64_t p) {
  require_prime(p, "check_theorem_1_2_i");
  VerificationRecord rec;
  rec.claim_id = "thm1.2-i/(1.17)";
  rec.param("p", static_cast<long long>(p));

  const mpz_class p2 = pow_ui(p, 2);
  const mpz_class sum = mod(multinomial_sum(p, static_cast<unsigned>(p - 1), false).value, p2);

  mpz_class rhs;
  bool glaisher_ok = true;
  if (p == 2) {
    rhs = mod(mpz_class(-1 - 1 - 4), p2);  // 2 B_1 + (-1)^1 - 4 with B_1 = -1/2
  } else {
    mpz_class pb = p_bernoulli_mod_p2(p).value();
    rhs = mod(pb + 1 - 2 * mpz_class(static_cast<unsigned long>(p)), p2);
    // Glaisher: (p-1)! == p B_{p-1} - p (mod p^2)
    glaisher_ok = factorial_mod(p - 1, p2).value() == mod(pb - p, p2);
  }

  rec.status = (sum == rhs && glaisher_ok) ? RecordStatus::pass : RecordStatus::fail;
  rec.note("lhs", sum.get_str());
  rec.note("rhs", rhs.get_str());
  rec.note("glaisher", glaisher_ok ? "1" : "0");
  return rec;
}

bool primality_via_1_18(std::uint64_t m) {
  if (m < 2) throw bad_parameters_error("primality_via_1_18: m must be >= 2");
  if (m > kPrimalityCriterionCap)
    throw resource_guard_error("primality_via_1_18: m exceeds the exact desk-scale bound");
  mpz_class s = multinomial_sum(m, static_cast<unsigned>(m - 1), false).value;
  return mpz_divisible_ui_p(s.get_mpz_t(), m) != 0;
}

VerificationRecord classify_theorem_1_2_ii(std::uint64_t n, std::uint64_t p,
                                           const mpz_class& precomputed_sum) {
  require_prime(p, "classify_theorem_1_2_ii");
  if (n < 1) throw bad_parameters_error("classify_theorem_1_2_ii: n must be >= 1");

  const DigitVector dv = digits_base_p(n, p);
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class predicted = 0;
  if (n % p == 1 && dv.all_digits_at_most_one())
    predicted = mod(mpz_class((dv.digit_sum - 1) % 2 == 0 ? 1 : -1), pz);
  mpz_class actual = mod(precomputed_sum, pz);

  VerificationRecord rec;
  rec.claim_id = "thm1.2-ii";
  rec.param("n", static_cast<long long>(n)).param("p", static_cast<long long>(p));
  rec.status = predicted == actual ? RecordStatus::pass : RecordStatus::fail;
  rec.note("predicted", predicted.get_str());
  rec.note("actual", actual.get_str());
  return rec;
}

VerificationRecord classify_theorem_1_2_ii(std::uint64_t n, std::uint64_t p) {
  return classify_theorem_1_2_ii(n, p,
                                 multinomial_sum(n, static_cast<unsigned>(p - 1), false).value);
}

VerificationRecord lemma_4_1_product(std::uint64_t n, std::uint64_t p) {
  require_prime(p, "lemma_4_1_product");
  if (n < 1) throw bad_parameters_error("lemma_4_1_product: n must be >= 1");

  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class prod = 1;
  for (std::uint64_t j = 1; j < p; ++j) {
    prod *= binomial(j * n, static_cast<std::int64_t>(n));
    prod = mod(prod, pz);
  }

  const DigitVector dv = digits_base_p(n, p);
  mpz_class predicted = 0;
  if (dv.all_digits_at_most_one())
    predicted = mod(mpz_class(dv.digit_sum % 2 == 0 ? 1 : -1), pz);

  VerificationRecord rec;
  rec.claim_id = "lem4.1";
  rec.param("n", static_cast<long long>(n)).param("p", static_cast<long long>(p));
  rec.status = prod == predicted ? RecordStatus::pass : RecordStatus::fail;
  rec.note("product", prod.get_str());
  rec.note("predicted", predicted.get_str());
  return rec;
}

VerificationRecord check_binom_2p2_minus_p(std::uint64_t p) {
  require_prime(p, "check_binom_2p2_minus_p");
  if (p == 2) throw bad_parameters_error("check_binom_2p2_minus_p: p must be odd");
  mpz_class p2 = pow_ui(p, 2);
  mpz_class lhs = mod(multinomial_equal(static_cast<unsigned>(p - 1), 2), p2);
  mpz_class rhs = mod(-mpz_class(static_cast<unsigned long>(p)), p2);

  VerificationRecord rec;
  rec.claim_id = "sec4/multinomial-2";
  rec.param("p", static_cast<long long>(p));
  rec.status = lhs == rhs ? RecordStatus::pass : RecordStatus::fail;
  rec.note("lhs", lhs.get_str());
  rec.note("rhs", rhs.get_str());
  return rec;
}

std::vector<SpecialPrimeHit> search_special_primes(std::uint64_t bound, unsigned workers) {
  if (bound > kSpecialPrimeSearchCap)
    throw resource_guard_error("search_special_primes: bound exceeds the search cap");
  if (workers < 1) workers = 1;

  const auto primes = primes_below(bound);
  std::vector<std::uint64_t> odd_primes;
  for (std::uint64_t p : primes)
    if (p > 2) odd_primes.push_back(p);

  std::vector<char> is_hit(odd_primes.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= odd_primes.size()) return;
      is_hit[i] = special_prime_fast_path(odd_primes[i]) ? 1 : 0;
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<SpecialPrimeHit> hits;
  for (std::size_t i = 0; i < odd_primes.size(); ++i) {
    const std::uint64_t p = odd_primes[i];
    bool fast = is_hit[i] != 0;
    bool cross_checked = p <= 107;
    bool direct = false;
    if (cross_checked) {
      mpz_class p2 = pow_ui(p, 2);
      direct = mod(multinomial_sum(p, static_cast<unsigned>(p - 1), false).value, p2) == 0;
      if (direct != fast)
        throw std::logic_error("search_special_primes: factorial and direct-sum paths disagree");
    }
    if (fast) hits.push_back({p, true, cross_checked, direct});
  }
  return hits;
}

std::vector<VerificationRecord> scan_conjecture_1_1(const mpz_class& m, std::uint64_t n_max,
                                                    unsigned a_max) {
  {
    mpz_class r = mod(m, 3);
    if (r != 1) throw bad_parameters_error("scan_conjecture_1_1: m must be 1 mod 3");
  }
  const long long mm = m.get_si();

  std::vector<VerificationRecord> failures;
  const bool mu_infinite = (m == 1);
  const long mu = mu_infinite ? 0 : vp(mpz_class(m - 1), 3).value;
  const Valuation mu_val = mu_infinite ? Valuation::infinity() : Valuation::finite(mu);

  // (1.13)/(1.14) over n <= n_max
  {
    std::vector<mpz_class> central(n_max);  // binomial(2k,k)
    central[0] = 1;
    for (std::uint64_t k = 0; k + 1 < n_max; ++k) {
      central[k + 1] = central[k] * 2 * (2 * k + 1);
      mpz_divexact_ui(central[k + 1].get_mpz_t(), central[k + 1].get_mpz_t(), k + 1);
    }
    mpz_class s_plain = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      s_plain = s_plain * m + central[n - 1];
      const long tn = vp(mpz_class(static_cast<unsigned long>(n)), 3).value;
      const Valuation tn_val = Valuation::finite(tn);

      Valuation lhs13 = vp(s_plain, 3) + Valuation::finite(-tn);
      Valuation bound13 = min(tn_val, mu_val + Valuation::finite(-1));
      if (!(lhs13 >= bound13)) {
        VerificationRecord rec;
        rec.claim_id = "conj1.1/(1.13)";
        rec.param("m", mm).param("n", static_cast<long long>(n));
        rec.status = RecordStatus::fail;
        rec.note("lhs_vp", vp_to_string(lhs13));
        rec.note("bound", vp_to_string(bound13));
        failures.push_back(std::move(rec));
      }

      mpz_class s_alt = central_sum_alt(n, m).normalized_value;
      Valuation lhs14 = vp(s_alt, 3) + Valuation::finite(-tn);
      Valuation bound14 = min(tn_val, mu_val) + Valuation::finite(-1);
      if (!(lhs14 >= bound14)) {
        VerificationRecord rec;
        rec.claim_id = "conj1.1/(1.14)";
        rec.param("m", mm).param("n", static_cast<long long>(n));
        rec.status = RecordStatus::fail;
        rec.note("lhs_vp", vp_to_string(lhs14));
        rec.note("bound", vp_to_string(bound14));
        failures.push_back(std::move(rec));
      }
    }
  }

  // The two displayed 3^a congruences; degenerate (mu infinite) ranges are empty.
  if (!mu_infinite) {
    const mpz_class m_1_over_3 = (m - 1) / 3;
    for (unsigned a = 1; a <= a_max; ++a) {
      const std::uint64_t n = mpz_get_ui(pow_ui(3, a).get_mpz_t());
      const mpz_class modulus = pow_ui(3, a + static_cast<unsigned>(mu));
      mpz_class mpow;
      mpz_powm(mpow.get_mpz_t(), mod(m, modulus).get_mpz_t(),
               mpz_class(static_cast<unsigned long>(n - 1)).get_mpz_t(), modulus.get_mpz_t());
      const mpz_class scale = mod(pow_ui(3, a) * mpow * m_1_over_3, modulus);

      if (a >= static_cast<unsigned>(mu)) {
        mpz_class lhs = mod(central_sum(n, m).normalized_value, modulus);
        if (lhs != scale) {
          VerificationRecord rec;
          rec.claim_id = "conj1.1/3a-plain";
          rec.param("m", mm).param("a", a);
          rec.status = RecordStatus::fail;
          rec.note("lhs", lhs.get_str());
          rec.note("rhs", scale.get_str());
          rec.note("modulus", modulus.get_str());
          failures.push_back(std::move(rec));
        }
      }
      if (a > static_cast<unsigned>(mu)) {
        mpz_class lhs = mod(central_sum_alt(n, m).normalized_value, modulus);
        mpz_class rhs = mod(-scale, modulus);
        if (lhs != rhs) {
          VerificationRecord rec;
          rec.claim_id = "conj1.1/3a-alt";
          rec.param("m", mm).param("a", a);
          rec.status = RecordStatus::fail;
          rec.note("lhs", lhs.get_str());
          rec.note("rhs", rhs.get_str());
          rec.note("modulus", modulus.get_str());
          failures.push_back(std::move(rec));
        }
      }
    }
  }

  // sum_{k<3^a} binomial(3^a-1,k)(-1)^k binomial(2k,k) == -3^{2a-1} (mod 3^{2a})
  for (unsigned a = 2; a <= a_max; ++a) {
    const std::uint64_t n = mpz_get_ui(pow_ui(3, a).get_mpz_t());
    const mpz_class modulus = pow_ui(3, 2 * a);
    mpz_class lhs = mod(central_sum_alt(n, mpz_class(1)).normalized_value, modulus);
    mpz_class rhs = mod(-pow_ui(3, 2 * a - 1), modulus);
    if (lhs != rhs) {
      VerificationRecord rec;
      rec.claim_id = "conj1.1/3a-central";
      rec.param("m", mm).param("a", a);
      rec.status = RecordStatus::fail;
      rec.note("lhs", lhs.get_str());
      rec.note("rhs", rhs.get_str());
      rec.note("modulus", modulus.get_str());
      failures.push_back(std::move(rec));
    }
  }

  return failures;
}

std::vector<VerificationRecord> scan_conjecture_1_2(std::uint64_t p, std::uint64_t n_max) {
  require_prime(p, "scan_conjecture_1_2");
  if ((p - 1) * n_max > 20000)
    throw resource_guard_error("scan_conjecture_1_2: (p-1)*n_max exceeds the desk-scale bound");

  std::vector<VerificationRecord> failures;
  const auto values = multinomial_values(static_cast<unsigned>(p - 1), n_max);

  mpz_class s_plain = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    s_plain += values[n - 1];
    const long tn = vp(mpz_class(static_cast<unsigned long>(n)), p).value;

    Valuation v_plain = vp(s_plain, p);
    if (!(v_plain >= Valuation::finite(tn))) {
      VerificationRecord rec;
      rec.claim_id = "conj1.2/(1.15)";
      rec.param("p", static_cast<long long>(p)).param("n", static_cast<long long>(n));
      rec.status = RecordStatus::fail;
      rec.note("lhs_vp", vp_to_string(v_plain));
      rec.note("bound", std::to_string(tn));
      failures.push_back(std::move(rec));
    }

    if (p > 2) {
      const long strong =
          tn + factorial_vp(2 * n, p) - 2 * factorial_vp(n, p);  // nu_p(n binom(2n,n))
      if (!(v_plain >= Valuation::finite(strong))) {
        VerificationRecord rec;
        rec.claim_id = "conj1.2/(1.15-strong)";
        rec.param("p", static_cast<long long>(p)).param("n", static_cast<long long>(n));
        rec.status = RecordStatus::fail;
        rec.note("lhs_vp", vp_to_string(v_plain));
        rec.note("bound", std::to_string(strong));
        failures.push_back(std::move(rec));
      }
    }

    mpz_class s_alt = 0, row = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
      mpz_class term = row * values[k];
      s_alt += (k % 2) ? -term : term;
      row *= (n - 1 - k);
      mpz_divexact_ui(row.get_mpz_t(), row.get_mpz_t(), k + 1);
    }
    Valuation v_alt = vp(s_alt, p);
    if (!(v_alt >= Valuation::finite(tn))) {
      VerificationRecord rec;
      rec.claim_id = "conj1.2/(1.16)";
      rec.param("p", static_cast<long long>(p)).param("n", static_cast<long long>(n));
      rec.status = RecordStatus::fail;
      rec.note("lhs_vp", vp_to_string(v_alt));
      rec.note("bound", std::to_string(tn));
      failures.push_back(std::move(rec));
    }
  }

  return failures;
}

VerificationRecord check_ssz(std::uint64_t n, const mpz_class& precomputed_sum) {
  if (n < 1) throw bad_parameters_error("check_ssz: n must be >= 1");
  Valuation lhs = vp(precomputed_sum, 3);
  const long rhs = 2 * vp(mpz_class(static_cast<unsigned long>(n)), 3).value +
                   factorial_vp(2 * n, 3) - 2 * factorial_vp(n, 3);

  VerificationRecord rec;
  rec.claim_id = "remark-ssz";
  rec.param("n", static_cast<long long>(n));
  rec.status = lhs == Valuation::finite(rhs) ? RecordStatus::pass : RecordStatus::fail;
  rec.note("lhs_vp", vp_to_string(lhs));
  rec.note("rhs_vp", std::to_string(rhs));
  return rec;
}

VerificationRecord check_ssz(std::uint64_t n) {
  return check_ssz(n, central_sum(n, mpz_class(1)).normalized_value);
}

}  // namespace padic
