#pragma once

// The degree d = 4m plane family Y^d + Y^(d/2) g(X,Z) + f_t(X,Z) = 0 with
//   g   = prod (X - eta_i/sqrt D Z)(X - eta_i sqrt D Z)
//   f_t = prod (X^2 - eta_i^-2 Z^2)(X + t eta_i^3 Z)(X - t^-1 eta_i^3 Z)
// built over the tower Q(sqrt D, zeta_(d/2)).

#include <optional>
#include <vector>

#include <json.hpp>

#include "weilcert/field.hpp"
#include "weilcert/forms.hpp"
#include "weilcert/pgl.hpp"
#include "weilcert/poly.hpp"

namespace weilcert {

struct PlaneCurveForm {
  FieldRef field;  // Q(sqrt D, zeta_(d/2))
  int degree = 0;
  Rat t;
  std::vector<Quad> etas;
  std::vector<long> exponents;  // eta_i = +-eta0^e_i, when known
  Poly g{field};                // g(X, 1), binary degree d/2
  Poly ft{field};               // f_t(X, 1), binary degree d
  Form3 form{field, 0};
  std::optional<TowerElt> alpha;

  int m() const { return degree / 4; }
  int tower_order() const { return degree / 2; }
};

PlaneCurveForm build_plane(long d, int degree, const Rat& t, const std::vector<Quad>& etas);
/// Assembles Y^d + Y^(d/2) g + ft from arbitrary parts (no parameters, no alpha).
PlaneCurveForm plane_from_parts(const FieldRef& field, int degree, const Poly& g, const Poly& ft);

/// First enumerated t for which the build succeeds and the curve is smooth.
Rat find_plane_t(long d, int degree, const std::vector<Quad>& etas, long bound);

struct SmoothnessReport {
  bool c1 = false;       // F(X, Y, 0) square-free as a binary form
  bool c2 = false;       // f_t(X, 1) square-free of degree d
  bool c3_minus = false; // g(X,1)^2 - 4 f_t(X,1) square-free
  bool c3_plus = false;  // g(X,1)^2 + 4 f_t(X,1) square-free
  bool c3() const { return c3_minus && c3_plus; }
  bool verdict() const { return c1 && c2 && c3(); }
  nlohmann::json to_json() const;
};

SmoothnessReport smoothness_check(const PlaneCurveForm& c);

/// (d-1)(d-2)/2; throws DomainError for d < 4.
int genus_of_degree(int d);

/// alpha = eta0^(sum e_i / m), checked against alpha^n = (prod eta_i)^2.
/// Throws DomainError when the etas are not unit powers with sum e_i = 0 mod m.
TowerElt find_alpha(const std::vector<Quad>& etas, int m, const FieldRef& tower);

/// [X : zeta Y : Z] with zeta = zeta_(d/2).
ProjMap3 plane_psi(const PlaneCurveForm& c);

struct PsiReport {
  bool preserves_form = false;
  int order = 0;
  bool ok(int expected_order) const { return preserves_form && order == expected_order; }
};

PsiReport psi_report(const PlaneCurveForm& c);
/// psi preserves F up to scaling and has order d/2.
bool verify_psi_automorphism(const PlaneCurveForm& c);

struct ConditionIIReport {
  std::vector<P1Point> zero_set;
  ShapeReport shapes;
  bool holds() const { return shapes.no_invariant_map(); }
  nlohmann::json to_json() const;
};

ConditionIIReport condition_ii_report(const PlaneCurveForm& c);

/// [Z : alpha Y : X].
ProjMap3 plane_a_sigma(const FieldRef& field, const TowerElt& alpha);

struct SigmaIsoReport {
  bool sigma_iso = false;
  std::optional<TowerElt> lambda;  // F o A_sigma = lambda * sigma(F)
  bool tau_invariant = false;      // tau(F) = F for every tau in Gal(Q(zeta)/Q)
  bool ok() const { return sigma_iso && tau_invariant; }
};

/// A o F-conjugate check: F o a proportional to aut(F).
std::optional<TowerElt> conjugate_isomorphism_factor(const Form3& f, const ProjMap3& a, const GaloisAut& aut);
SigmaIsoReport sigma_iso_report(const PlaneCurveForm& c, const TowerElt& alpha);
bool verify_sigma_iso(const PlaneCurveForm& c);
bool verify_sigma_iso(const PlaneCurveForm& c, const TowerElt& alpha);

struct PlaneCocycleCandidate {
  int psi_power = 0;
  ProjMap3 f;
  ProjMap3 composite;  // f o sigma(f)
  bool is_identity = false;
  bool zero_diagonal = false;  // composite entries (1,1) and (3,3) vanish
  bool diagonal = false;       // composite has no off-diagonal entries
};

struct PlaneCocycleReport {
  std::vector<PlaneCocycleCandidate> candidates;
  bool fails = false;  // no candidate composite is the identity
};

/// Candidates A_sigma psi^k, 0 <= k < d/2; throws PreconditionError unless verify_sigma_iso holds.
PlaneCocycleReport plane_cocycle_fails(const PlaneCurveForm& c);

struct BitangentReport {
  Poly p;
  int degree = 0;
  bool square_free = false;
};

/// P(X) = g(X,1)^2 - 4 f_t(X,1) for d = 4; throws DomainError otherwise.
BitangentReport bitangent_discriminant(const PlaneCurveForm& c);

}  // namespace weilcert
