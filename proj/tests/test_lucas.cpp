#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/errors.hpp"
#include "padic/lucas.hpp"

using namespace padic;

TEST_CASE("lucas_u small cases") {
  CHECK(lucas_u({3, 7}, 0) == 0);
  CHECK(lucas_u({3, 7}, 1) == 1);
  CHECK(lucas_u({3, 7}, 2) == 3);

  // Fibonacci: A = 1, B = -1
  const long fib[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
  for (std::uint64_t n = 0; n < 13; ++n) CHECK(lucas_u({1, -1}, n) == fib[n]);

  // A = 2, B = 1 collapses to u_n = n
  for (std::uint64_t n = 0; n <= 50; ++n) CHECK(lucas_u({2, 1}, n) == n);
}

TEST_CASE("degenerate discriminant gives u_k = k (A/2)^{k-1}") {
  for (long half : {-3L, -1L, 2L, 4L}) {
    LucasParams params{2 * half, half * half};
    REQUIRE(params.discriminant() == 0);
    mpz_class pw = 1;
    for (std::uint64_t k = 1; k <= 50; ++k) {
      CHECK(lucas_u(params, k) == k * pw);
      pw *= half;
    }
  }
}

TEST_CASE("u_polynomial first values and degrees") {
  CHECK(u_polynomial(0).is_zero());
  CHECK(u_polynomial(1) == IntPolynomial::constant(1));
  CHECK(u_polynomial(2) == IntPolynomial::x());
  CHECK(u_polynomial(3) == IntPolynomial({-1, 0, 1}));  // x^2 - 1
  for (std::uint64_t k = 1; k <= 20; ++k) CHECK(u_polynomial(k).degree() == static_cast<int>(k) - 1);
}

TEST_CASE("u_polynomial evaluation matches the one-parameter Lucas family") {
  for (long m = -10; m <= 10; ++m)
    for (std::uint64_t k = 0; k <= 20; ++k)
      CHECK(u_polynomial(k).evaluate(m) == lucas_u({m, 1}, k));
}

TEST_CASE("polynomial composition is exact") {
  // (x^2 - 1) composed with (x - 2) = x^2 - 4x + 3
  IntPolynomial composed = IntPolynomial({-1, 0, 1}).compose(IntPolynomial({-2, 1}));
  CHECK(composed == IntPolynomial({3, -4, 1}));
}

TEST_CASE("identity (2.1) holds on the full symbolic grid") {
  CHECK(check_identity_2_1(1, 0).status == RecordStatus::pass);
  CHECK(check_identity_2_1(3, 0).status == RecordStatus::pass);
  CHECK(check_identity_2_1(4, -2).status == RecordStatus::pass);
  CHECK(check_identity_2_1(2, 1).status == RecordStatus::pass);
  for (std::uint64_t n = 1; n <= 12; ++n)
    for (std::int64_t d = -4; d <= 4; ++d) CHECK(check_identity_2_1(n, d).passed());
}

TEST_CASE("lemma 2.2 congruence examples") {
  CHECK(check_lemma_2_2({2, 1}, 9, 6).status == RecordStatus::pass);   // Delta = 0
  CHECK(check_lemma_2_2({1, -1}, 5, 5).status == RecordStatus::pass);  // Fibonacci, Delta = 5
  CHECK(check_lemma_2_2({4, 1}, 3, 3).status == RecordStatus::pass);   // u_3 = 15
  CHECK(check_lemma_2_2({4, 1}, 1, 7).status == RecordStatus::vacuous);
}

TEST_CASE("lemma 2.2 rejects illegal divisors") {
  CHECK_THROWS_AS(check_lemma_2_2({1, -1}, 4, 3), bad_parameters_error);  // even d
  CHECK_THROWS_AS(check_lemma_2_2({1, -1}, 7, 3), bad_parameters_error);  // 7 does not divide 5
}

TEST_CASE("lemma 2.2 on a sampled (A,B) grid") {
  for (long A = -8; A <= 8; A += 3)
    for (long B = -8; B <= 8; B += 2) {
      LucasParams params{A, B};
      mpz_class delta = params.discriminant();
      for (std::uint64_t d = 1; d <= 99; d += 2) {
        if (delta != 0 && !mpz_divisible_ui_p(delta.get_mpz_t(), d)) continue;
        for (std::uint64_t n = 1; n <= 30; ++n) CHECK(check_lemma_2_2(params, d, n).passed());
      }
    }
}
