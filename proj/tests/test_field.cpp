#include <doctest.h>

#include "support.hpp"
#include "weilcert/errors.hpp"
#include "weilcert/field.hpp"

using namespace weilcert;

TEST_CASE("rationals normalize and parse") {
  CHECK(Rat(4, 6) == Rat(2, 3));
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat::from_string("-6/4") == Rat(-3, 2));
  CHECK(Rat::from_string("7") == Rat(7));
  CHECK_THROWS(Rat::from_string("1/0"));
  CHECK_THROWS(Rat::from_string("1/-2"));
  CHECK_THROWS_AS(Rat(0).inverse(), DivisionByZero);
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
  CHECK(Rat(-5, 3).to_string() == "-5/3");
}

TEST_CASE("field descriptors validate D and n") {
  CHECK_THROWS_AS(FieldDesc::make(4), DomainError);
  CHECK_THROWS_AS(FieldDesc::make(1), DomainError);
  CHECK_THROWS_AS(FieldDesc::make(-3), DomainError);
  CHECK_THROWS_AS(FieldDesc::make(2, 0), DomainError);
  auto f = FieldDesc::make(2, 4);
  CHECK(f->degree() == 2);
  CHECK(f->is_field());
  CHECK_FALSE(FieldDesc::make(2, 8)->is_field());
  CHECK_FALSE(FieldDesc::make(5, 5)->is_field());
  CHECK(FieldDesc::make(3, 4)->is_field());
  CHECK_FALSE(FieldDesc::make(3, 12)->is_field());
}

TEST_CASE("cyclotomic polynomials") {
  auto as_longs = [](int n) {
    std::vector<long> out;
    for (const Rat& r : cyclotomic_polynomial(n)) out.push_back(r.num().get_si());
    return out;
  };
  CHECK(as_longs(1) == std::vector<long>{-1, 1});
  CHECK(as_longs(2) == std::vector<long>{1, 1});
  CHECK(as_longs(4) == std::vector<long>{1, 0, 1});
  CHECK(as_longs(6) == std::vector<long>{1, -1, 1});
  CHECK(as_longs(8) == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(as_longs(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int n = 1; n <= 30; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) - 1 == euler_phi(n));
}

TEST_CASE("quadratic elements") {
  Quad eta(Rat(1), Rat(1), 2);
  CHECK(eta.norm() == Rat(-1));
  CHECK(eta.inverse() == Quad(Rat(-1), Rat(1), 2));
  CHECK(eta.pow(3) == Quad(Rat(7), Rat(5), 2));
  CHECK(eta.pow(-2) == Quad(Rat(3), Rat(-2), 2));
  CHECK(eta.to_string() == "1+1*s");
  CHECK(Quad(Rat(3, 2), Rat(-1, 3), 2).to_string() == "3/2-1/3*s");
  CHECK(Quad::rational(Rat(-4), 2).to_string() == "-4");
  CHECK_THROWS_AS(Quad(Rat(0), Rat(0), 2).inverse(), DivisionByZero);
  CHECK((Quad::sqrt_d(5) * Quad::sqrt_d(5)) == Quad::rational(Rat(5), 5));
}

TEST_CASE("tower arithmetic and Galois action") {
  auto f = FieldDesc::make(2, 4);
  TowerElt z = TowerElt::zeta(f);
  CHECK(z * z == TowerElt(f, Rat(-1)));
  CHECK(z.pow(4).is_one());
  CHECK(z.inverse() == -z);
  TowerElt s = TowerElt::sqrt_d(f);
  CHECK(apply_galois(GaloisAut::sigma(), s) == -s);
  CHECK(apply_galois(GaloisAut::sigma(), z) == z);
  CHECK(apply_galois(GaloisAut::tau(3), z) == -z);
  CHECK(units_mod(8) == std::vector<int>{1, 3, 5, 7});
  CHECK_THROWS_AS(TowerElt(f).inverse(), DivisionByZero);
  CHECK_THROWS_AS(TowerElt(f) + TowerElt(FieldDesc::make(3, 4)), FieldMismatch);
  CHECK((s + z).in_quadratic_subfield() == false);
  CHECK(s.as_quad() == Quad::sqrt_d(2));
  CHECK_THROWS_AS(z.as_quad(), DomainError);
}

TEST_CASE("zero divisors in a tower that is not a field") {
  // sqrt 2 = zeta_8 + zeta_8^-1, so sqrt 2 - (zeta + zeta^7) vanishes and
  // sqrt 2 + zeta + zeta^7 is a zero divisor.
  auto f = FieldDesc::make(2, 8);
  TowerElt z = TowerElt::zeta(f);
  TowerElt w = z + z.pow(7);
  TowerElt s = TowerElt::sqrt_d(f);
  CHECK_FALSE((s - w).is_zero());
  CHECK(((s - w) * (s + w)).is_zero());
  CHECK_THROWS_AS((s + w).inverse(), DivisionByZero);
}

TEST_CASE("property: tower ring axioms in Q(sqrt 3, zeta_6)") {
  testsupport::Gen gen(11);
  auto f = FieldDesc::make(3, 5);
  for (int i = 0; i < 150; ++i) {
    TowerElt a = gen.tower(f), b = gen.tower(f), c = gen.tower(f);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    for (int k : units_mod(5)) {
      GaloisAut g = GaloisAut::tau(k);
      CHECK(apply_galois(g, a * b) == apply_galois(g, a) * apply_galois(g, b));
    }
  }
}
