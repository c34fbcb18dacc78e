#include <doctest.h>

#include "support.hpp"
#include "weilcert/errors.hpp"
#include "weilcert/pell.hpp"

using namespace weilcert;

TEST_CASE("fundamental solutions") {
  auto s2 = solve_negative_pell(2);
  REQUIRE(s2);
  CHECK(s2->a == 1);
  CHECK(s2->b == 1);
  auto s13 = solve_negative_pell(13);
  REQUIRE(s13);
  CHECK(s13->a == 18);
  CHECK(s13->b == 5);
  auto s29 = solve_negative_pell(29);
  REQUIRE(s29);
  CHECK(s29->a == 70);
  CHECK(s29->b == 13);
  CHECK_FALSE(solve_negative_pell(3));
  CHECK_FALSE(solve_negative_pell(34));
  CHECK_THROWS_AS(solve_negative_pell(12), DomainError);
  CHECK_THROWS_AS(fundamental_norm_minus_one_unit(7), PellUnsolvable);
}

TEST_CASE("solutions satisfy the equation") {
  for (long d = 2; d <= 400; ++d) {
    if (!is_square_free_integer(d)) continue;
    if (auto s = solve_negative_pell(d)) CHECK(s->a * s->a - d * s->b * s->b == -1);
  }
  // Fundamental solution for D = 421 has 19-digit entries.
  auto big = solve_negative_pell(421);
  REQUIRE(big);
  CHECK(big->a * big->a - 421 * big->b * big->b == -1);
}

TEST_CASE("odd powers of the fundamental unit") {
  auto us = norm_minus_one_units(2, 3);
  REQUIRE(us.size() == 3);
  CHECK(us[0] == Quad(Rat(1), Rat(1), 2));
  CHECK(us[1] == Quad(Rat(7), Rat(5), 2));
  CHECK(us[2] == Quad(Rat(41), Rat(29), 2));
  for (const Quad& u : norm_minus_one_units(5, 4)) CHECK(u.norm() == Rat(-1));
}

TEST_CASE("eta selection policies") {
  auto h = select_etas(2, FamilyKind::hyperelliptic, 3);
  CHECK(h.etas == norm_minus_one_units(2, 3));
  CHECK(hyperelliptic_etas_admissible(h.etas, 2));

  auto p2 = select_etas(2, FamilyKind::plane, 2);
  CHECK(p2.exponents == std::vector<long>{1, 3});
  auto p3 = select_etas(5, FamilyKind::plane, 3);
  CHECK(p3.exponents == std::vector<long>{1, 3, 5});
  long sum = 0;
  for (long e : p3.exponents) sum += e;
  CHECK(sum % 3 == 0);
  CHECK_THROWS_AS(select_etas(3, FamilyKind::plane, 1), PellUnsolvable);
}

TEST_CASE("admissibility violations are named") {
  std::string why;
  Quad eta(Rat(1), Rat(1), 2);
  CHECK_FALSE(hyperelliptic_etas_admissible({Quad(Rat(1), Rat(0), 2)}, 2, &why));
  CHECK_FALSE(hyperelliptic_etas_admissible({eta, -eta.inverse()}, 2, &why));
  CHECK_FALSE(why.empty());
  CHECK_FALSE(hyperelliptic_etas_admissible({eta, eta}, 2, &why));
  CHECK_FALSE(hyperelliptic_etas_admissible({Quad(Rat(3), Rat(1), 2)}, 2, &why));
}

TEST_CASE("unit exponents") {
  Quad eta0(Rat(1), Rat(1), 2);
  CHECK(unit_exponent(eta0.pow(5), eta0) == 5);
  CHECK(unit_exponent(-eta0.pow(-3), eta0) == -3);
  CHECK(unit_exponent(Quad(Rat(2), Rat(1), 2), eta0) == std::nullopt);
}

TEST_CASE("oracle: brute-force negative Pell up to D = 120") {
  for (long d = 2; d <= 120; ++d) {
    if (!is_square_free_integer(d)) continue;
    std::optional<std::pair<long, long>> brute;
    for (long b = 1; b <= 3000 && !brute; ++b) {
      mpz_class v = mpz_class(d) * b * b - 1;
      if (testsupport::brute_is_square(v)) brute = {mpz_class(sqrt(v)).get_si(), b};
    }
    auto s = solve_negative_pell(d);
    CAPTURE(d);
    if (brute) {
      REQUIRE(s);
    } else if (s) {
      // Fundamental solution beyond the brute-force window (D = 61, 109).
      CHECK(s->b > 3000);
    }
    if (s && brute) {
      CHECK(s->a == brute->first);
      CHECK(s->b == brute->second);
    }
  }
}
