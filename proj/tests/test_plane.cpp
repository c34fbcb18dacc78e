#include <doctest.h>

#include "support.hpp"
#include "weilcert/errors.hpp"
#include "weilcert/pell.hpp"
#include "weilcert/plane.hpp"

using namespace weilcert;

namespace {

const Quad kEta(Rat(1), Rat(1), 2);

PlaneCurveForm quartic() { return build_plane(2, 4, Rat(3), {kEta}); }

Poly rpoly(const FieldRef& f, std::vector<Quad> cs) {
  std::vector<TowerElt> out;
  for (const Quad& c : cs) out.emplace_back(f, c);
  return Poly(f, out);
}

Quad q(long a, long b, long den = 1) { return Quad(Rat(a, den), Rat(b, den), 2); }

}  // namespace

TEST_CASE("quartic instance: g and f_t") {
  PlaneCurveForm c = quartic();
  const FieldRef& f = c.field;
  CHECK(f->n() == 2);
  CHECK(c.g == rpoly(f, {q(3, 2), Quad(Rat(-3), Rat(-3, 2), 2), q(1, 0)}));
  Poly x = Poly::x(f);
  Poly expected = (x * x - Poly::constant(TowerElt(f, q(3, -2)))) *
                  Poly::linear_factor(TowerElt(f, q(-21, -15))) * Poly::linear_factor(TowerElt(f, q(7, 5, 3)));
  CHECK(c.ft == expected);
  CHECK(c.form.coeff({0, 4, 0}).is_one());
  CHECK(c.form.coeff({1, 2, 1}) == TowerElt(f, Quad(Rat(-3), Rat(-3, 2), 2)));
}

TEST_CASE("invalid plane parameters") {
  CHECK_THROWS_AS(build_plane(2, 6, Rat(3), {kEta}), DomainError);
  CHECK_THROWS_AS(build_plane(2, 0, Rat(3), {}), DomainError);
  CHECK_THROWS_AS(build_plane(2, 4, Rat(-1), {kEta}), DomainError);
  CHECK_THROWS_AS(build_plane(2, 4, Rat(3), {kEta, kEta}), DomainError);
  CHECK_THROWS_AS(build_plane(2, 4, Rat(3), {kEta * kEta}), DomainError);
}

TEST_CASE("support and coefficient field invariants") {
  for (int d : {4, 8, 12}) {
    auto etas = select_etas(2, FamilyKind::plane, d / 4).etas;
    PlaneCurveForm c = build_plane(2, d, Rat(2), etas);
    for (const auto& [mono, coeff] : c.form.terms()) {
      CHECK((mono[1] == 0 || mono[1] == d / 2 || mono[1] == d));
      CHECK(coeff.in_quadratic_subfield());
    }
    for (int k : units_mod(c.tower_order())) CHECK(conjugate_coeffs(GaloisAut::tau(k), c.form) == c.form);
    // F(X, Y, 0) = Y^d + X^(d/2) Y^(d/2) + X^d
    Poly at_inf = c.form.restrict_z0_dehomogenized_y();
    Poly expected = Poly::x(c.field).pow(d) + Poly::x(c.field).pow(d / 2) + Poly::constant(TowerElt::one(c.field));
    CHECK(at_inf == expected);
  }
}

TEST_CASE("smoothness of the quartic instance") {
  SmoothnessReport r = smoothness_check(quartic());
  CHECK(r.c1);
  CHECK(r.c2);
  CHECK(r.c3());
  CHECK(r.verdict());
}

TEST_CASE("planted defects flip exactly one smoothness flag") {
  PlaneCurveForm c = quartic();
  const FieldRef& f = c.field;
  Poly x = Poly::x(f);
  Poly defect = (x - Poly::constant(TowerElt::one(f))).pow(2) * (x * x + Poly::constant(TowerElt::one(f)));

  // Leading coefficient 2 of g makes F(X, Y, 0) = (X^2 + Y^2)^2.
  SmoothnessReport r1 = smoothness_check(plane_from_parts(f, 4, c.g * TowerElt(f, Rat(2)), c.ft));
  CHECK_FALSE(r1.c1);
  CHECK((r1.c2 && r1.c3()));

  SmoothnessReport r2 = smoothness_check(plane_from_parts(f, 4, c.g, defect));
  CHECK_FALSE(r2.c2);
  CHECK((r2.c1 && r2.c3()));

  // f_t = (g^2 + 3 (x-1)^2 (x^2+1)) / 4 gives g^2 - 4 f_t = -3 (x-1)^2 (x^2+1).
  Poly ft3 = (c.g * c.g + defect * TowerElt(f, Rat(3))) * TowerElt(f, Rat(1, 4));
  SmoothnessReport r3 = smoothness_check(plane_from_parts(f, 4, c.g, ft3));
  CHECK_FALSE(r3.c3_minus);
  CHECK_FALSE(r3.c3());
  CHECK((r3.c1 && r3.c2 && r3.c3_plus));
}

TEST_CASE("genus of plane curves") {
  CHECK(genus_of_degree(4) == 3);
  CHECK(genus_of_degree(5) == 6);
  CHECK(genus_of_degree(8) == 21);
  CHECK_THROWS_AS(genus_of_degree(3), DomainError);
}

TEST_CASE("alpha from the unit exponents") {
  auto f2 = FieldDesc::make(2, 2);
  CHECK(find_alpha({kEta}, 1, f2) == TowerElt(f2, kEta));
  auto f4 = FieldDesc::make(2, 4);
  CHECK(find_alpha({kEta, kEta.pow(3)}, 2, f4) == TowerElt(f4, q(3, 2)));
  auto f6 = FieldDesc::make(2, 6);
  CHECK_THROWS_AS(find_alpha({kEta, kEta.pow(3), kEta.pow(7)}, 3, f6), DomainError);
  for (int m = 1; m <= 4; ++m) {
    auto sel = select_etas(5, FamilyKind::plane, m);
    auto f = FieldDesc::make(5, 2 * m);
    Quad prod = Quad::rational(Rat(1), 5);
    for (const Quad& e : sel.etas) prod *= e;
    CHECK(find_alpha(sel.etas, m, f).pow(2 * m) == TowerElt(f, prod * prod));
  }
}

TEST_CASE("psi is an automorphism of order d/2") {
  PsiReport r4 = psi_report(quartic());
  CHECK(r4.preserves_form);
  CHECK(r4.order == 2);
  PlaneCurveForm c8 = build_plane(2, 8, Rat(3), select_etas(2, FamilyKind::plane, 2).etas);
  CHECK(verify_psi_automorphism(c8));
  CHECK(psi_report(c8).order == 4);
  PlaneCurveForm bad = quartic();
  bad.form.add_term({1, 1, 2}, TowerElt::one(bad.field));
  CHECK_FALSE(verify_psi_automorphism(bad));
}

TEST_CASE("special-shape involutions on the zeros of g") {
  ConditionIIReport r1 = condition_ii_report(quartic());
  CHECK_FALSE(r1.holds());
  bool found = false;
  for (const auto& m : r1.shapes.matches)
    if (m.shape == SpecialShape::psi_a && m.a == TowerElt(m.a.field(), kEta.pow(-2))) found = true;
  CHECK(found);

  auto etas = select_etas(2, FamilyKind::plane, 2).etas;
  ConditionIIReport r2 = condition_ii_report(build_plane(2, 8, Rat(3), etas));
  CHECK_FALSE(r2.holds());
  found = false;
  for (const auto& m : r2.shapes.matches)
    if (m.shape == SpecialShape::psi_a && m.a == TowerElt(m.a.field(), (etas[0] * etas[1]).inverse())) found = true;
  CHECK(found);
}

TEST_CASE("oracle: m = 3 special shapes against stabilizer involutions") {
  for (long d : {2L, 5L}) {
    auto etas = select_etas(d, FamilyKind::plane, 3).etas;
    PlaneCurveForm c = build_plane(d, 12, Rat(2), etas);
    ConditionIIReport r = condition_ii_report(c);
    REQUIRE(r.zero_set.size() == 6);
    std::size_t involutions = 0;
    for (const Moebius& m : testsupport::stabilizer_oracle(r.zero_set))
      if (!m.is_identity() && m.compose(m).is_identity()) ++involutions;
    CHECK(r.shapes.matches.size() == involutions);
    CHECK(r.holds() == (involutions == 0));
  }
}

TEST_CASE("sigma-conjugate isomorphism") {
  PlaneCurveForm c = quartic();
  REQUIRE(c.alpha);
  CHECK(*c.alpha == TowerElt(c.field, kEta));
  CHECK(verify_sigma_iso(c));
  SigmaIsoReport r = sigma_iso_report(c, *c.alpha);
  REQUIRE(r.lambda);
  CHECK(*r.lambda == TowerElt(c.field, kEta.pow(4)));
  CHECK_FALSE(verify_sigma_iso(c, TowerElt(c.field, Rat(2))));

  auto f = FieldDesc::make(2);
  TowerElt one = TowerElt::one(f);
  Form3 fermat = Form3::monomial(one, {4, 0, 0}) + Form3::monomial(one, {0, 4, 0}) + Form3::monomial(one, {0, 0, 4});
  CHECK(conjugate_isomorphism_factor(fermat, ProjMap3::identity(f), GaloisAut::sigma()).has_value());

  PlaneCurveForm no_alpha = plane_from_parts(c.field, 4, c.g, c.ft);
  CHECK_THROWS_AS(verify_sigma_iso(no_alpha), PreconditionError);
}

TEST_CASE("plane cocycle composites are diag(1, N(alpha) zeta^2k, 1)") {
  PlaneCurveForm c = quartic();
  PlaneCocycleReport r = plane_cocycle_fails(c);
  CHECK(r.fails);
  REQUIRE(r.candidates.size() == 2);
  Matrix expected = identity_matrix(c.field, 3);
  expected[1][1] = TowerElt(c.field, Rat(-1));
  for (const auto& cand : r.candidates) {
    CHECK_FALSE(cand.is_identity);
    CHECK(cand.diagonal);
    CHECK_FALSE(cand.zero_diagonal);
    CHECK(cand.composite.matrix() == expected);
    // The composite is an automorphism of the curve.
    CHECK(proportionality(substitute_linear(c.form, cand.composite), c.form).has_value());
  }
}

TEST_CASE("even m admits a candidate satisfying the cocycle condition") {
  // alpha = eta0^2 has norm +1, so A_sigma sigma(A_sigma) = diag(1, N(alpha), 1) = 1.
  PlaneCurveForm c = build_plane(2, 8, Rat(3), select_etas(2, FamilyKind::plane, 2).etas);
  PlaneCocycleReport r = plane_cocycle_fails(c);
  CHECK_FALSE(r.fails);
  CHECK(r.candidates[0].is_identity);
}

TEST_CASE("odd m obstructs for every candidate") {
  for (long d : {2L, 5L, 13L}) {
    auto etas = select_etas(d, FamilyKind::plane, 3).etas;
    PlaneCurveForm c = build_plane(d, 12, Rat(2), etas);
    PlaneCocycleReport r = plane_cocycle_fails(c);
    CHECK(r.fails);
    CHECK(r.candidates.size() == 6);
  }
}

TEST_CASE("bitangent discriminant") {
  BitangentReport b = bitangent_discriminant(quartic());
  CHECK(b.degree == 4);
  CHECK(b.square_free);
  CHECK_THROWS_AS(bitangent_discriminant(build_plane(2, 8, Rat(3), select_etas(2, FamilyKind::plane, 2).etas)),
                  DomainError);
}

TEST_CASE("automatic t search is deterministic") {
  Rat t1 = find_plane_t(2, 4, {kEta}, 10);
  CHECK(t1 == find_plane_t(2, 4, {kEta}, 10));
  CHECK(smoothness_check(build_plane(2, 4, t1, {kEta})).verdict());
}
