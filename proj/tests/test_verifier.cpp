#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "padic/errors.hpp"
#include "padic/primality.hpp"
#include "padic/sums.hpp"
#include "padic/verifier.hpp"

using namespace padic;

namespace {

bool all_pass(const std::vector<VerificationRecord>& recs) {
  return std::all_of(recs.begin(), recs.end(),
                     [](const VerificationRecord& r) { return r.passed(); });
}

}  // namespace

TEST_CASE("theorem 1.1 on hand-checked cases") {
  CHECK(all_pass(check_theorem_1_1(3, 7, 3)));
  CHECK(all_pass(check_theorem_1_1(1, 7, 3)));
  CHECK(all_pass(check_theorem_1_1(9, 13, 3)));
  CHECK(all_pass(check_theorem_1_1(5, 9, 5)));
  CHECK(all_pass(check_theorem_1_1(7, -3, 7)));
  CHECK(all_pass(check_theorem_1_1(12, 29, 5)));
}

TEST_CASE("theorem 1.1 parameter validation") {
  CHECK_THROWS_AS(check_theorem_1_1(3, 6, 2), bad_parameters_error);   // p even
  CHECK_THROWS_AS(check_theorem_1_1(3, 4, 3), bad_parameters_error);   // m = 4
  CHECK_THROWS_AS(check_theorem_1_1(3, 8, 3), bad_parameters_error);   // 3 does not divide 4
  CHECK_THROWS_AS(check_theorem_1_1(3, 7, 9), bad_parameters_error);   // 9 not prime
}

TEST_CASE("the n = p^a specializations (1.4), (1.5)") {
  auto recs = check_1_4_and_1_5(5, 1, -1);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].passed());
  CHECK(recs[1].passed());
  CHECK(all_pass(check_1_4_and_1_5(5, 2, -1)));
  CHECK(all_pass(check_1_4_and_1_5(7, 1, -3)));
  auto p3 = check_1_4_and_1_5(3, 2, 7);
  CHECK(p3[0].status == RecordStatus::pass);
  CHECK(p3[1].status == RecordStatus::vacuous);
}

TEST_CASE("corollaries on a small window") {
  auto recs = check_corollaries(-6, 6, {5, 7, 11, 13}, 2, 40);
  CHECK_FALSE(recs.empty());
  CHECK(all_pass(recs));
  CHECK_THROWS_AS(check_corollaries(1, 2, {3}, 1), bad_parameters_error);  // (1.8) needs p > 3
}

TEST_CASE("theorem 1.2(i): sum mod p^2 against p B_{p-1}") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
    CHECK(check_theorem_1_2_i(p).passed());
}

TEST_CASE("primality criterion (1.18)") {
  CHECK(primality_via_1_18(2));
  CHECK(primality_via_1_18(5));
  CHECK_FALSE(primality_via_1_18(4));
  CHECK_FALSE(primality_via_1_18(9));
  for (std::uint64_t m = 2; m <= 30; ++m) CHECK(primality_via_1_18(m) == is_prime_u64(m));
  CHECK_THROWS_AS(primality_via_1_18(61), resource_guard_error);
  CHECK_THROWS_AS(primality_via_1_18(1), bad_parameters_error);
}

TEST_CASE("theorem 1.2(ii): digit prediction mod p") {
  CHECK(classify_theorem_1_2_ii(2, 3).passed());   // digits 2 -> sum divisible by 3
  CHECK(classify_theorem_1_2_ii(4, 3).passed());   // digits 11 -> sum == -1
  CHECK(classify_theorem_1_2_ii(7, 3).passed());   // digits 21 -> divisible
  CHECK(classify_theorem_1_2_ii(10, 3).passed());  // digits 101 -> sum == -1
  for (std::uint64_t n = 1; n <= 40; ++n)
    for (std::uint64_t p : {2ull, 3ull, 5ull}) CHECK(classify_theorem_1_2_ii(n, p).passed());
}

TEST_CASE("lemma 4.1 product formula") {
  CHECK(lemma_4_1_product(1, 5).passed());  // Wilson: prod = (p-1)! == -1
  CHECK(lemma_4_1_product(4, 3).passed());
  CHECK(lemma_4_1_product(2, 3).passed());
  for (std::uint64_t n = 1; n <= 60; ++n)
    for (std::uint64_t p : {3ull, 5ull, 7ull}) CHECK(lemma_4_1_product(n, p).passed());
}

TEST_CASE("multinomial(p-1 parts, k=2) == -p mod p^2") {
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) CHECK(check_binom_2p2_minus_p(p).passed());
  CHECK_THROWS_AS(check_binom_2p2_minus_p(2), bad_parameters_error);
}

TEST_CASE("special-prime search") {
  auto hits10 = search_special_primes(10);
  REQUIRE(hits10.size() == 1);
  CHECK(hits10[0].p == 3);
  CHECK(hits10[0].via_factorial);
  CHECK(hits10[0].direct_sum_checked);
  CHECK(hits10[0].via_direct_sum);

  auto hits200 = search_special_primes(200);
  REQUIRE(hits200.size() == 3);
  CHECK(hits200[0].p == 3);
  CHECK(hits200[1].p == 11);
  CHECK(hits200[2].p == 107);

  CHECK_THROWS_AS(search_special_primes(2000000), resource_guard_error);
}

TEST_CASE("conjecture 1.1 scan is clean at desk scale") {
  CHECK(scan_conjecture_1_1(4, 50, 3).empty());
  CHECK(scan_conjecture_1_1(7, 50, 3).empty());
  CHECK(scan_conjecture_1_1(1, 50, 3).empty());
  CHECK(scan_conjecture_1_1(-2, 50, 3).empty());
  CHECK_THROWS_AS(scan_conjecture_1_1(2, 10, 1), bad_parameters_error);
}

TEST_CASE("conjecture 1.2 scan is clean at desk scale") {
  CHECK(scan_conjecture_1_2(2, 100).empty());
  CHECK(scan_conjecture_1_2(5, 30).empty());
  CHECK_THROWS_AS(scan_conjecture_1_2(211, 1000), resource_guard_error);
}

TEST_CASE("3-adic valuation formula for the plain central sum") {
  for (std::uint64_t n = 1; n <= 120; ++n) CHECK(check_ssz(n).passed());
}
