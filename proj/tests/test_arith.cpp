#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/properties.hpp"
#include "support/reference.hpp"
#include "tetra/bignum.hpp"
#include "tetra/errors.hpp"
#include "tetra/tower.hpp"
#include "tetra/valuation.hpp"

using namespace tetra;

TEST_CASE("decimal round trip") {
  prop::Gen g(prop::kSeed);
  for (int i = 0; i < 500; ++i) {
    const std::string s = g.decimal(60);
    CHECK(BigUint::from_decimal(s).to_decimal() == s);
  }
  CHECK(BigUint::from_decimal("0").is_zero());
  CHECK_THROWS_AS(BigUint::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(BigUint::from_decimal("-3"), std::invalid_argument);
  CHECK_THROWS_AS(BigUint::from_decimal("12a"), std::invalid_argument);
  CHECK_THROWS(BigUint(3) - BigUint(4));
}

TEST_CASE("base residues") {
  const Base a(BigUint::from_decimal("163574218751"));
  CHECK(a.mod(1000) == 751);
  CHECK(a.mod(20) == 11);
  CHECK(a.mod(25) == 1);
  CHECK(a.mod(8) == 7);
}

TEST_CASE("valuation examples") {
  CHECK(padic_valuation(18, 3).value() == 2);
  CHECK(padic_valuation(0, 5).is_infinite());
  CHECK(padic_valuation(7, 2).value() == 0);
  CHECK(padic_valuation(-50, 5).value() == 2);
  CHECK(padic_valuation(0, 5).to_string() == "inf");
  CHECK_THROWS_AS(padic_valuation(10, 4), std::invalid_argument);
  CHECK_THROWS_AS(padic_valuation(10, 1), std::invalid_argument);
  CHECK(v5(mpz_class("163574218750")) == 13);
}

TEST_CASE("valuation algebra") {
  const auto failures = prop::valuation_algebra(prop::kSeed, 20000);
  CHECK_MESSAGE(failures.empty(), (failures.empty() ? "" : failures.front()));
}

TEST_CASE("tower examples") {
  CHECK(tetration_mod(2, 4, 5).to_decimal() == "65536");
  CHECK(tetration_mod(2, 5, 8).to_decimal() == "19156736");
  CHECK(tetration_mod(BigUint::from_decimal("123456789"), 1, 4).to_u64() == 6789);
  CHECK(tetration_mod(0, 1, 3).to_u64() == 0);
  CHECK(tetration_mod(0, 2, 3).to_u64() == 1);
  CHECK(tetration_mod(1, 9, 3).to_u64() == 1);
  CHECK_THROWS_AS(tetration_mod(2, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(tetration_mod(2, 3, 0), std::invalid_argument);
}

TEST_CASE("towers below the reduction threshold") {
  // 2^4 = 16 mod 8 = 0: the naive e mod lambda + lambda rule gets this wrong.
  CHECK(tower_mod_2_5(2, 3, 3, 0) == 0);
  CHECK(tower_mod_2_5(2, 3, 5, 0) == 16);
  CHECK(tower_mod_2_5(2, 3, 4, 0) == 0);
}

TEST_CASE("towers equal exact values when small") {
  const mpz_class limit("1" + std::string(400, '0'));
  for (unsigned a = 0; a <= 5; ++a) {
    for (unsigned b = 1; b <= 3; ++b) {
      const mpz_class exact = ref::exact_tower(a, b, limit);
      if (exact < 0) continue;
      for (unsigned n : {1U, 2U, 5U, 20U, 64U}) {
        mpz_class m;
        mpz_ui_pow_ui(m.get_mpz_t(), 10, n);
        CHECK(tetration_mod(a, b, n).mpz() == exact % m);
      }
    }
  }
}

TEST_CASE("tower residues are compatible") {
  const auto failures = prop::tower_compatibility(100, 6, 64);
  CHECK_MESSAGE(failures.empty(), (failures.empty() ? "" : failures.front()));
}

TEST_CASE("towers agree with the totient reference") {
  const auto failures = prop::tower_matches_reference(prop::kSeed + 1, 400);
  CHECK_MESSAGE(failures.empty(), (failures.empty() ? "" : failures.front()));
}

TEST_CASE("capped tower") {
  CHECK(capped_tower(2, 4, 1000000) == 65536);
  CHECK(capped_tower(2, 5, 1000000) == 1000000);
  CHECK(capped_tower(3, 0, 10) == 1);
  CHECK(capped_tower(0, 3, 10) == 0);
  CHECK(capped_tower(0, 4, 10) == 1);
  CHECK(capped_tower(1, 40, 10) == 1);
  CHECK(capped_tower(mpz_class("123456789012345678901234567890"), 1, 99) == 99);
}

TEST_CASE("digits") {
  CHECK(digit(57, 4) == 0);
  CHECK(digit(501, 3) == 5);
  CHECK(digit(BigUint::from_decimal("163574218751"), 1) == 1);
  CHECK(digit(BigUint::from_decimal("163574218751"), 12) == 1);
  CHECK(digit(BigUint::from_decimal("163574218751"), 11) == 6);
  CHECK_THROWS_AS(digit(5, 0), std::invalid_argument);
}

TEST_CASE("common trailing digits") {
  CHECK(common_trailing_digits(65536, 19156736, 8) == 2);
  CHECK(common_trailing_digits(5, 5, 8) == 8);
  CHECK(common_trailing_digits(0, 1000, 8) == 3);
}
