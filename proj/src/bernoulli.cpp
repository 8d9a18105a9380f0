#include "padic/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "padic/combinatorics.hpp"
#include "padic/primality.hpp"

namespace padic {

namespace {

std::mutex cache_mutex;
std::vector<mpq_class> cache;  // cache[k] = B_k

void extend_cache(unsigned n) {
  if (cache.empty()) cache.push_back(mpq_class(1));
  for (unsigned i = cache.size(); i <= n; ++i) {
    // B_i = -1/(i+1) * sum_{k<i} binomial(i+1, k) B_k
    mpq_class acc = 0;
    for (unsigned k = 0; k < i; ++k)
      acc += mpq_class(binomial(i + 1, static_cast<std::int64_t>(k))) * cache[k];
    acc /= mpq_class(-static_cast<long>(i) - 1);
    acc.canonicalize();
    cache.push_back(acc);
  }
}

}  // namespace

mpq_class bernoulli(unsigned n) {
  if (n > kBernoulliBound)
    throw resource_guard_error("bernoulli: n exceeds the exact desk-scale bound");
  std::lock_guard<std::mutex> lock(cache_mutex);
  extend_cache(n);
  return cache[n];
}

ResidueClass p_bernoulli_mod_p2(std::uint64_t p) {
  require_prime(p, "p_bernoulli_mod_p2");
  if (p == 2) throw bad_parameters_error("p_bernoulli_mod_p2: p must be odd");
  mpq_class pb = mpq_class(static_cast<unsigned long>(p)) * bernoulli(static_cast<unsigned>(p - 1));
  pb.canonicalize();
  mpz_class num(pb.get_num()), den(pb.get_den());
  mpz_class p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), p, 2);
  if (mpz_divisible_ui_p(den.get_mpz_t(), p))
    throw std::logic_error("p_bernoulli_mod_p2: denominator divisible by p, "
                           "contradicting von Staudt-Clausen");
  return ResidueClass(num, p2) * mod_inverse(den, p2);
}

}  // namespace padic
