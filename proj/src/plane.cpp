#include "weilcert/plane.hpp"

#include <algorithm>

#include "weilcert/errors.hpp"
#include "weilcert/hyperelliptic.hpp"
#include "weilcert/pell.hpp"

namespace weilcert {

namespace {

void check_t(const Rat& t) {
  if (t.is_zero() || t == Rat(1) || t == Rat(-1)) throw DomainError("t must lie in Q \\ {0, 1, -1}");
}

Form3 assemble(const FieldRef& field, int degree, const Poly& g, const Poly& ft) {
  Form3 f = Form3::monomial(TowerElt::one(field), {0, degree, 0});
  f += Form3::from_binary(g, degree / 2, degree / 2);
  f += Form3::from_binary(ft, degree, 0);
  return f;
}

bool square_free_nonzero(const Poly& p) { return !p.is_zero() && is_square_free(p); }

}  // namespace

PlaneCurveForm build_plane(long d, int degree, const Rat& t, const std::vector<Quad>& etas) {
  if (degree < 4 || degree % 4 != 0) throw DomainError("plane degree must be a positive multiple of 4");
  if (degree > kMaxFormDegree) throw DomainError("plane degree too large");
  check_t(t);
  const int m = degree / 4;
  if (static_cast<int>(etas.size()) != m)
    throw DomainError("plane degree " + std::to_string(degree) + " needs " + std::to_string(m) + " units");
  for (const Quad& eta : etas) {
    if (eta.d() != d) throw FieldMismatch("unit built over a different D");
    if (eta.norm() != Rat(-1)) throw DomainError("unit " + eta.to_string() + " does not have norm -1");
  }

  PlaneCurveForm c;
  c.field = FieldDesc::make(d, degree / 2);
  c.degree = degree;
  c.t = t;
  c.etas = etas;
  const FieldRef& fld = c.field;
  const Quad s = Quad::sqrt_d(d);
  const TowerElt tt(fld, t);

  Poly g = Poly::constant(TowerElt::one(fld));
  Poly ft = Poly::constant(TowerElt::one(fld));
  const Poly x = Poly::x(fld);
  for (const Quad& eta : etas) {
    g *= Poly::linear_factor(TowerElt(fld, eta / s));
    g *= Poly::linear_factor(TowerElt(fld, eta * s));
    const TowerElt cube(fld, eta.pow(3));
    ft *= x * x - Poly::constant(TowerElt(fld, eta.pow(-2)));
    ft *= Poly::linear_factor(-(tt * cube));
    ft *= Poly::linear_factor(cube / tt);
  }
  c.g = g;
  c.ft = ft;
  c.form = assemble(fld, degree, g, ft);

  const Quad eta0 = fundamental_norm_minus_one_unit(d);
  for (const Quad& eta : etas)
    if (auto e = unit_exponent(eta, eta0)) c.exponents.push_back(*e);
  c.alpha = find_alpha(etas, m, fld);
  return c;
}

PlaneCurveForm plane_from_parts(const FieldRef& field, int degree, const Poly& g, const Poly& ft) {
  if (degree < 4 || degree % 2 != 0) throw DomainError("plane degree must be even and >= 4");
  PlaneCurveForm c;
  c.field = field;
  c.degree = degree;
  c.g = g;
  c.ft = ft;
  c.form = assemble(field, degree, g, ft);
  return c;
}

Rat find_plane_t(long d, int degree, const std::vector<Quad>& etas, long bound) {
  if (bound < 2) throw DomainError("t search bound must be >= 2");
  for (const Rat& t : enumerate_t(bound)) {
    PlaneCurveForm c = build_plane(d, degree, t, etas);
    if (smoothness_check(c).verdict()) return t;
  }
  throw DomainError("no smooth t of height <= " + std::to_string(bound));
}

nlohmann::json SmoothnessReport::to_json() const {
  return {{"c1", c1}, {"c2", c2}, {"c3", c3()}, {"c3_minus", c3_minus}, {"c3_plus", c3_plus}, {"verdict", verdict()}};
}

SmoothnessReport smoothness_check(const PlaneCurveForm& c) {
  SmoothnessReport r;
  Poly at_infinity = c.form.restrict_z0_dehomogenized_y();
  r.c1 = !at_infinity.is_zero() && is_square_free_binary_form(at_infinity, c.degree);
  r.c2 = c.ft.degree() == c.degree && is_square_free(c.ft);
  const Poly g2 = c.g * c.g;
  const Poly four_ft = c.ft * TowerElt(c.field, Rat(4));
  r.c3_minus = square_free_nonzero(g2 - four_ft);
  r.c3_plus = square_free_nonzero(g2 + four_ft);
  return r;
}

int genus_of_degree(int d) {
  if (d < 4) throw DomainError("degree must be >= 4");
  return (d - 1) * (d - 2) / 2;
}

TowerElt find_alpha(const std::vector<Quad>& etas, int m, const FieldRef& tower) {
  if (m < 1 || etas.empty()) throw DomainError("find_alpha needs m >= 1 and at least one unit");
  const long d = tower->d();
  const Quad eta0 = fundamental_norm_minus_one_unit(d);
  long sum = 0;
  Quad prod = Quad::rational(Rat(1), d);
  for (const Quad& eta : etas) {
    auto e = unit_exponent(eta, eta0);
    if (!e) throw DomainError("unit " + eta.to_string() + " is not a power of the fundamental unit");
    sum += *e;
    prod *= eta;
  }
  if (sum % m != 0) throw DomainError("unit exponents do not sum to a multiple of m");
  TowerElt alpha(tower, eta0.pow(sum / m));
  if (alpha.pow(tower->n()) != TowerElt(tower, prod * prod))
    throw DomainError("alpha^(d/2) differs from (prod eta)^2");
  return alpha;
}

ProjMap3 plane_psi(const PlaneCurveForm& c) {
  Matrix m = identity_matrix(c.field, 3);
  m[1][1] = TowerElt::zeta(c.field);
  return ProjMap3(m);
}

PsiReport psi_report(const PlaneCurveForm& c) {
  PsiReport r;
  const ProjMap3 psi = plane_psi(c);
  r.preserves_form = proportionality(substitute_linear(c.form, psi), c.form).has_value();
  const ProjMap3 id = ProjMap3::identity(c.field);
  ProjMap3 power = psi;
  for (int k = 1; k <= 2 * c.degree; ++k) {
    if (power == id) {
      r.order = k;
      break;
    }
    power = power.compose(psi);
  }
  return r;
}

bool verify_psi_automorphism(const PlaneCurveForm& c) { return psi_report(c).ok(c.degree / 2); }

nlohmann::json ConditionIIReport::to_json() const {
  nlohmann::json zs = nlohmann::json::array();
  for (const P1Point& p : zero_set) zs.push_back(p.to_string());
  return {{"holds", holds()}, {"zero_set", zs}, {"shapes", shapes.to_json()}};
}

ConditionIIReport condition_ii_report(const PlaneCurveForm& c) {
  if (c.etas.empty()) throw PreconditionError("the zero set of g needs the unit parameters");
  ConditionIIReport r;
  const Quad s = Quad::sqrt_d(c.field->d());
  for (const Quad& eta : c.etas) {
    for (const Quad& z : {eta / s, eta * s}) {
      TowerElt root(c.field, z);
      if (!c.g.eval(root).is_zero()) throw PreconditionError("expected zero of g is not a root");
      P1Point p = P1Point::finite(root);
      if (std::find(r.zero_set.begin(), r.zero_set.end(), p) == r.zero_set.end()) r.zero_set.push_back(p);
    }
  }
  std::sort(r.zero_set.begin(), r.zero_set.end());
  r.shapes = special_shape_invariance(r.zero_set);
  return r;
}

ProjMap3 plane_a_sigma(const FieldRef& field, const TowerElt& alpha) {
  Matrix m(3, std::vector<TowerElt>(3, TowerElt(field)));
  m[0][2] = TowerElt::one(field);
  m[1][1] = alpha;
  m[2][0] = TowerElt::one(field);
  return ProjMap3(m);
}

std::optional<TowerElt> conjugate_isomorphism_factor(const Form3& f, const ProjMap3& a, const GaloisAut& aut) {
  return proportionality(substitute_linear(f, a), conjugate_coeffs(aut, f));
}

SigmaIsoReport sigma_iso_report(const PlaneCurveForm& c, const TowerElt& alpha) {
  SigmaIsoReport r;
  r.lambda = conjugate_isomorphism_factor(c.form, plane_a_sigma(c.field, alpha), GaloisAut::sigma());
  r.sigma_iso = r.lambda.has_value();
  r.tau_invariant = true;
  for (int k : units_mod(c.field->n()))
    if (conjugate_coeffs(GaloisAut::tau(k), c.form) != c.form) r.tau_invariant = false;
  return r;
}

bool verify_sigma_iso(const PlaneCurveForm& c, const TowerElt& alpha) { return sigma_iso_report(c, alpha).ok(); }

bool verify_sigma_iso(const PlaneCurveForm& c) {
  if (!c.alpha) throw PreconditionError("alpha is not set");
  return verify_sigma_iso(c, *c.alpha);
}

PlaneCocycleReport plane_cocycle_fails(const PlaneCurveForm& c) {
  if (!c.alpha || !verify_sigma_iso(c)) throw PreconditionError("sigma isomorphism not verified");
  PlaneCocycleReport r;
  const ProjMap3 a = plane_a_sigma(c.field, *c.alpha);
  const ProjMap3 psi = plane_psi(c);
  const ProjMap3 id = ProjMap3::identity(c.field);
  ProjMap3 psi_k = id;
  r.fails = true;
  for (int k = 0; k < c.degree / 2; ++k) {
    PlaneCocycleCandidate cand{k, a.compose(psi_k), id, false, false, false};
    cand.composite = cand.f.compose(conjugate_coeffs(GaloisAut::sigma(), cand.f));
    cand.is_identity = projective_equal(cand.composite, id);
    const Matrix& m = cand.composite.matrix();
    cand.zero_diagonal = m[0][0].is_zero() && m[2][2].is_zero();
    cand.diagonal = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && !m[i][j].is_zero()) cand.diagonal = false;
    if (cand.is_identity) r.fails = false;
    r.candidates.push_back(std::move(cand));
    psi_k = psi_k.compose(psi);
  }
  return r;
}

BitangentReport bitangent_discriminant(const PlaneCurveForm& c) {
  if (c.degree != 4) throw DomainError("bitangent discriminant is defined for d = 4 only");
  BitangentReport r{c.g * c.g - c.ft * TowerElt(c.field, Rat(4)), 0, false};
  r.degree = r.p.degree();
  r.square_free = square_free_nonzero(r.p);
  return r;
}

}  // namespace weilcert
