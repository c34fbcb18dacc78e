#pragma once

// Generic Weil cocycle scan for a degree-2 Galois generator sigma: given an
// isomorphism h from the sigma-conjugate curve onto the curve and the full
// automorphism list, every isomorphism is a o h, and a descent datum needs
// f o sigma(f) = 1 for one of them.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "weilcert/field.hpp"
#include "weilcert/forms.hpp"
#include "weilcert/hyperelliptic.hpp"
#include "weilcert/poly.hpp"

namespace weilcert {

struct HyperCurve {
  Poly p;  // y^2 = p(x)
  int genus = 0;
};

using CurvePayload = std::variant<HyperCurve, Form3>;
using IsoMap = std::variant<HypMap, ProjMap3>;

struct DescentProblem {
  FieldRef field;  // declared tower L
  CurvePayload curve;
  std::vector<IsoMap> automorphisms;
  IsoMap h;  // sigma-conjugate curve -> curve
  GaloisAut sigma = GaloisAut::sigma();
};

struct HypothesesResult {
  bool ok = false;
  std::vector<std::string> reasons;  // empty when ok
};

/// Field membership, payload/map kinds, automorphisms verified and closed
/// under composition, and h verified onto the curve from its conjugate.
HypothesesResult hypotheses_check(const DescentProblem& problem);

struct CocycleEntry {
  IsoMap candidate;
  IsoMap composite;  // candidate o sigma(candidate)
  bool is_identity = false;
};

/// One entry per automorphism a, candidate a o h; throws PreconditionError when the hypotheses fail.
std::vector<CocycleEntry> cocycle_scan(const DescentProblem& problem);

/// True when the scan found no candidate satisfying the cocycle condition.
bool scan_fails(const std::vector<CocycleEntry>& entries);

nlohmann::json iso_to_json(const IsoMap& m);
nlohmann::json scan_to_json(const std::vector<CocycleEntry>& entries);

}  // namespace weilcert
