#include <doctest.h>

#include "support.hpp"
#include "weilcert/errors.hpp"
#include "weilcert/poly.hpp"

using namespace weilcert;

namespace {

Poly qpoly(const FieldRef& f, std::vector<long> cs) {
  std::vector<TowerElt> out;
  for (long c : cs) out.emplace_back(f, Rat(c));
  return Poly(f, out);
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
  auto f = FieldDesc::make(2);
  Poly p = qpoly(f, {-1, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(qpoly(f, {0, 0}).is_zero());
  CHECK(qpoly(f, {}).degree() == -1);
  auto [q, r] = divmod(p, qpoly(f, {-1, 1}));
  CHECK(q == qpoly(f, {1, 1}));
  CHECK(r.is_zero());
  CHECK(p.derivative() == qpoly(f, {0, 2}));
  CHECK(p.eval(TowerElt(f, Rat(3))) == TowerElt(f, Rat(8)));
  CHECK_THROWS_AS(divmod(p, Poly(f)), DivisionByZero);
}

TEST_CASE("gcd and square-freeness") {
  auto f = FieldDesc::make(2);
  Poly a = qpoly(f, {-1, 0, 1});   // x^2 - 1
  Poly b = qpoly(f, {1, 2, 1});    // (x + 1)^2
  CHECK(poly_gcd(a, b) == qpoly(f, {1, 1}));
  CHECK(is_square_free(a));
  CHECK_FALSE(is_square_free(b));
  CHECK(is_square_free(qpoly(f, {5})));
  CHECK_THROWS_AS(is_square_free(Poly(f)), DomainError);
  // x^2 - 2 is irreducible over Q but splits over Q(sqrt 2); still square-free.
  CHECK(is_square_free(qpoly(f, {-2, 0, 1})));
  TowerElt s = TowerElt::sqrt_d(f);
  CHECK_FALSE(is_square_free(Poly::linear_factor(s).pow(2) * qpoly(f, {1, 1})));
}

TEST_CASE("binary form square-freeness counts roots at infinity") {
  auto f = FieldDesc::make(2);
  Poly p = qpoly(f, {-1, 0, 1});
  CHECK(is_square_free_binary_form(p, 2));
  CHECK(is_square_free_binary_form(p, 3));   // one root at infinity
  CHECK_FALSE(is_square_free_binary_form(p, 4));
}

TEST_CASE("resultant and discriminant conventions") {
  auto f = FieldDesc::make(2);
  CHECK(resultant(qpoly(f, {-2, 0, 1}), qpoly(f, {0, 1})) == TowerElt(f, Rat(-2)));
  CHECK(resultant(qpoly(f, {-1, 1}), qpoly(f, {1, 1})) == TowerElt(f, Rat(2)));
  CHECK(discriminant(qpoly(f, {-2, 0, 1})) == TowerElt(f, Rat(8)));
  CHECK(discriminant(qpoly(f, {1, 2, 1})).is_zero());
  // x^3 + p x + q: -4p^3 - 27 q^2
  CHECK(discriminant(qpoly(f, {1, -1, 0, 1})) == TowerElt(f, Rat(-23)));
}

TEST_CASE("property: planted repeated factors are detected") {
  testsupport::Gen gen(21);
  auto f = FieldDesc::make(3);
  for (int i = 0; i < 120; ++i) {
    const int deg = static_cast<int>(gen.integer(1, 6));
    Poly p = gen.square_free_poly(f, deg);
    CHECK(is_square_free(p));
    CHECK_FALSE(discriminant(p).is_zero());
    Poly planted = p * Poly::linear_factor(TowerElt(f, gen.rat(12))).pow(2);
    CHECK_FALSE(is_square_free(planted));
    CHECK(discriminant(planted).is_zero());
  }
}

TEST_CASE("property: resultant is multiplicative and conjugation commutes") {
  testsupport::Gen gen(8);
  auto f = FieldDesc::make(2);
  for (int i = 0; i < 40; ++i) {
    Poly a = gen.square_free_poly(f, static_cast<int>(gen.integer(1, 4)));
    Poly b = gen.square_free_poly(f, static_cast<int>(gen.integer(1, 4)));
    Poly c = gen.square_free_poly(f, static_cast<int>(gen.integer(1, 3)));
    CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    Poly k = Poly::constant(TowerElt(f, gen.quad(2))) * a + Poly::x(f);
    CHECK(conjugate_coeffs(GaloisAut::sigma(), k * b) ==
          conjugate_coeffs(GaloisAut::sigma(), k) * conjugate_coeffs(GaloisAut::sigma(), b));
  }
}
