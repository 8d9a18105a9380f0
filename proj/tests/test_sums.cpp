#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/combinatorics.hpp"
#include "padic/errors.hpp"
#include "padic/sums.hpp"

using namespace padic;

namespace {

// Naive oracle: each term built from scratch.
mpz_class naive_central(std::uint64_t n, const mpz_class& m, bool alternating) {
  mpz_class total = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    mpz_class term;
    mpz_bin_uiui(term.get_mpz_t(), 2 * k, k);
    if (alternating) {
      term *= binomial(n - 1, static_cast<std::int64_t>(k));
      if (k % 2 == 1) term = -term;
    }
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n - 1 - k));
    total += term * pw;
  }
  return total;
}

}  // namespace

TEST_CASE("central_sum examples") {
  CHECK(central_sum(1, 5).normalized_value == 1);
  CHECK(central_sum(2, 5).normalized_value == 7);   // 5 + 2
  CHECK(central_sum(3, 7).normalized_value == 69);  // 49 + 14 + 6
  CHECK(central_sum(3, 7).normalization_exponent == 2);
  CHECK_THROWS_AS(central_sum(4, 0), bad_parameters_error);  // the rational sum needs m != 0
  CHECK_THROWS_AS(central_sum(0, 5), bad_parameters_error);
}

TEST_CASE("central_sum_alt examples") {
  CHECK(central_sum_alt(1, 7).normalized_value == 1);
  CHECK(central_sum_alt(2, 7).normalized_value == 5);   // 7 - 2
  CHECK(central_sum_alt(3, 7).normalized_value == 27);  // 49 - 28 + 6
}

TEST_CASE("central sums match the naive oracle on a grid") {
  for (long m = -50; m <= 50; ++m) {
    if (m == 0) continue;
    for (std::uint64_t n = 1; n <= 80; ++n) {
      CHECK(central_sum(n, m).normalized_value == naive_central(n, m, false));
      CHECK(central_sum_alt(n, m).normalized_value == naive_central(n, m, true));
    }
  }
  for (std::uint64_t n = 150; n <= 200; n += 25) {
    CHECK(central_sum(n, -21).normalized_value == naive_central(n, -21, false));
    CHECK(central_sum_alt(n, 13).normalized_value == naive_central(n, 13, true));
  }
}

TEST_CASE("multinomial_values and multinomial_sum") {
  auto vals = multinomial_values(3, 4);
  REQUIRE(vals.size() == 4);
  CHECK(vals[0] == 1);
  CHECK(vals[1] == 6);    // 3!/1
  CHECK(vals[2] == 90);   // 6!/8
  CHECK(vals[3] == 1680);
  for (std::uint64_t k = 0; k < 4; ++k) CHECK(vals[k] == multinomial_equal(3, k));

  CHECK(multinomial_sum(3, 2, false).value == 9);          // 1 + 2 + 6
  CHECK(multinomial_sum(3, 2, true).value == 3);           // 1 - 2*2 + 6
  CHECK(multinomial_sum(5, 4, false).value == 63435145);
  CHECK(multinomial_sum(5, 4, false).value % 25 == 20);
}

TEST_CASE("binomial transform identities (2.4)-(2.6)") {
  for (unsigned h : {2u, 3u, 4u})
    for (long m : {1L, -1L, 2L, -2L, 5L, -5L})
      for (std::uint64_t n = 1; n <= 12; ++n) {
        auto rec = check_transform_2_5(n, h, m);
        CHECK(rec.passed());
      }
}

TEST_CASE("Dyson constant term equals the multinomial coefficient") {
  CHECK(dyson_constant_term(2, 0) == 1);
  CHECK(dyson_constant_term(2, 1) == 2);
  CHECK(dyson_constant_term(3, 1) == 6);
  for (unsigned h = 1; h <= 4; ++h)
    for (std::uint64_t k = 0; k <= 3; ++k)
      CHECK(dyson_constant_term(h, k) == multinomial_equal(h, k));
  CHECK_THROWS_AS(dyson_constant_term(5, 1), resource_guard_error);
  CHECK_THROWS_AS(dyson_constant_term(3, 4), resource_guard_error);
}

TEST_CASE("sigma identity and telescoping sum") {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    CHECK(check_sigma_identity(n).passed());
    CHECK(check_telescoping_sigma(n).passed());
  }
}
