#pragma once

// The genus-g family y^2 = (x+t)(x+1/t)(x+sqrt D)(x-1/sqrt D) prod (x^2 - eta_i^2)
// over Q(sqrt D), its reduced automorphism group and the Galois-conjugate
// isomorphism x -> 1/x.

#include <vector>

#include <json.hpp>

#include "weilcert/errors.hpp"
#include "weilcert/field.hpp"
#include "weilcert/pgl.hpp"
#include "weilcert/poly.hpp"

namespace weilcert {

/// Branch polynomial with two branch points that coincide.
class BranchCollision : public DomainError {
 public:
  BranchCollision(const std::string& first, const std::string& second)
      : DomainError("branch points coincide: " + first + " and " + second), first_(first), second_(second) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_, second_;
};

struct HyperellipticModel {
  FieldRef field;  // Q(sqrt D), n = 1
  int genus = 0;
  Rat t;
  std::vector<Quad> etas;
  Poly branch_poly{field};
  std::vector<P1Point> branch_set;
};

/// (x, y) -> ((a x + b) / (c x + d), e y / (c x + d)^(g+1)). The pairs (M, e) and
/// (lambda M, lambda^(g+1) e) are identified; stored with M canonically scaled.
class HypMap {
 public:
  HypMap(TowerElt a, TowerElt b, TowerElt c, TowerElt d, TowerElt scale, int genus);
  static HypMap identity(const FieldRef& field, int genus);
  /// (x, y) -> (x, -y).
  static HypMap hyperelliptic_involution(const FieldRef& field, int genus);

  const Moebius& moebius() const { return moebius_; }
  const TowerElt& scale() const { return scale_; }
  int genus() const { return genus_; }
  const FieldRef& field() const { return scale_.field(); }
  bool is_identity() const { return *this == identity(field(), genus_); }

  friend bool operator==(const HypMap& x, const HypMap& y) {
    return x.genus_ == y.genus_ && x.moebius_ == y.moebius_ && x.scale_ == y.scale_;
  }

  nlohmann::json to_json() const;

 private:
  Moebius moebius_;
  TowerElt scale_;
  int genus_;
};

HyperellipticModel build_hyper(long d, int genus, const Rat& t, const std::vector<Quad>& etas);

/// Branch set stabilizer in PGL_2 is trivial, i.e. Aut = <iota>.
bool reduced_aut_is_trivial(const HyperellipticModel& model);

/// t in Q \ {0, +-1} with height max(|p|, q) <= bound, in enumeration order:
/// by height, then positives before negatives, then decreasing absolute value.
std::vector<Rat> enumerate_t(long bound);

/// First enumerated t giving distinct branch points and a trivial reduced group.
Rat find_good_t(long d, int genus, const std::vector<Quad>& etas, long bound);

/// e^2 src(x) == (c x + d)^(2g+2) dst((a x + b) / (c x + d)) exactly.
bool hyper_iso_verify(const Poly& src, const Poly& dst, const HypMap& f, int genus);

/// f1 o f2.
HypMap hyper_compose(const HypMap& f1, const HypMap& f2, int genus);
HypMap hyper_inverse(const HypMap& f);
HypMap conjugate_coeffs(const GaloisAut& aut, const HypMap& f);

/// (x, y) -> (1/x, (prod eta_i) y / x^(g+1)) from sigma-conjugate onto the curve.
HypMap hyper_f_sigma(const HyperellipticModel& model);

struct HyperCocycleCandidate {
  HypMap f;
  HypMap composite;  // f o sigma(f)
  bool is_identity;
};

struct HyperCocycleReport {
  std::vector<HyperCocycleCandidate> candidates;
  bool fails = false;  // no candidate satisfies f o sigma(f) = 1
};

/// Scan of {f_sigma, iota o f_sigma}; throws PreconditionError unless the reduced group is trivial.
HyperCocycleReport hyper_cocycle_fails(const HyperellipticModel& model);
/// Same scan for a given base isomorphism, with no automorphism precondition.
HyperCocycleReport hyper_cocycle_scan(const HypMap& f_sigma, int genus);

}  // namespace weilcert
