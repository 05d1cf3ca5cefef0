#include <catch2/catch_amalgamated.hpp>

#include "liedim/group_algebra.hpp"

using namespace liedim;

TEST_CASE("omega_2 by hand") {
  const GroupAlgebraElement w = omega_element(2);
  REQUIRE(w.support_size() == 2);
  CHECK(w.terms().at(Permutation(2)) == 1);
  CHECK(w.terms().at(parse_cycles("(1,2)", 2)) == -1);
  CHECK(w * w == 2 * w);
}

TEST_CASE("algebra arithmetic") {
  const GroupAlgebraElement a = GroupAlgebraElement::basis(parse_cycles("(1,2)", 3), 2);
  const GroupAlgebraElement b = GroupAlgebraElement::basis(parse_cycles("(1,2)", 3), -2);
  CHECK((a + b).is_zero());
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a * GroupAlgebraElement::basis(Permutation(4)), std::invalid_argument);
  const GroupAlgebraElement c =
      GroupAlgebraElement::basis(parse_cycles("(1,2)", 3)) * GroupAlgebraElement::basis(parse_cycles("(2,3)", 3));
  CHECK(c.terms().count(parse_cycles("(1,3,2)", 3)) == 1);
}

TEST_CASE("omega identity over the integers") {
  for (int n = 1; n <= 6; ++n) CHECK(omega_identity_check(n));
  CHECK(omega_element(6).support_size() <= 32);
}

TEST_CASE("omega squared vanishes mod p when p divides n") {
  for (int p : {2, 3, 5}) {
    const GroupAlgebraElement w = omega_element(p);
    CHECK((w * w).mod(p).is_zero());
    CHECK(omega_identity_check_mod(p, p));
  }
  CHECK(omega_identity_check_mod(4, 2));
  CHECK(omega_identity_check_mod(6, 2));
  CHECK(omega_identity_check_mod(6, 3));
  CHECK(omega_identity_check_mod(5, 3));  // n not divisible by p also holds
}

TEST_CASE("omega respects the degree budget") {
  CHECK_THROWS_AS(omega_element(8), BudgetExceeded);
  CHECK_NOTHROW(omega_element(8, 8));
}
