#pragma once

// Moebius transformations of P^1 over a tower and stabilizers of finite point sets.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weilcert/field.hpp"

namespace weilcert {

/// (u : v) scaled so that v = 1, or (1 : 0) for infinity.
class P1Point {
 public:
  P1Point(TowerElt u, TowerElt v);
  static P1Point finite(const TowerElt& x) { return P1Point(x, TowerElt::one(x.field())); }
  static P1Point infinity(const FieldRef& field) { return P1Point(TowerElt::one(field), TowerElt(field)); }

  const TowerElt& u() const { return u_; }
  const TowerElt& v() const { return v_; }
  const FieldRef& field() const { return u_.field(); }
  bool is_infinity() const { return v_.is_zero(); }
  /// Affine coordinate; throws DomainError at infinity.
  const TowerElt& value() const;

  friend bool operator==(const P1Point& a, const P1Point& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
  /// Finite points first (by coordinate), infinity last.
  friend std::strong_ordering operator<=>(const P1Point& a, const P1Point& b);

  std::string to_string() const;

 private:
  TowerElt u_, v_;
};

/// x -> (a x + b) / (c x + d), first nonzero entry scaled to 1.
class Moebius {
 public:
  Moebius(TowerElt a, TowerElt b, TowerElt c, TowerElt d);
  static Moebius identity(const FieldRef& field);

  const TowerElt& a() const { return m_[0]; }
  const TowerElt& b() const { return m_[1]; }
  const TowerElt& c() const { return m_[2]; }
  const TowerElt& d() const { return m_[3]; }
  const FieldRef& field() const { return m_[0].field(); }
  bool is_identity() const { return *this == identity(field()); }

  /// this o other.
  Moebius compose(const Moebius& other) const;
  Moebius inverse() const;

  friend bool operator==(const Moebius& x, const Moebius& y) { return x.m_ == y.m_; }
  friend std::strong_ordering operator<=>(const Moebius& x, const Moebius& y);

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  std::array<TowerElt, 4> m_;
};

P1Point moebius_apply(const Moebius& m, const P1Point& p);
bool projective_equal(const Moebius& x, const Moebius& y);

/// The unique map with src[i] -> dst[i]; throws DomainError on repeated points.
Moebius moebius_from_triple(const std::array<P1Point, 3>& src, const std::array<P1Point, 3>& dst);

/// m(set) == set as sets.
bool preserves_set(const Moebius& m, const std::vector<P1Point>& set);

/// All of PGL_2 preserving `set` (|set| >= 3, distinct points), sorted.
std::vector<Moebius> finite_set_stabilizer(std::vector<P1Point> set);

enum class SpecialShape { psi_a, psi_ab };

struct ShapeMatch {
  SpecialShape shape;
  TowerElt a;
  std::optional<TowerElt> b;  // psi_ab only
  Moebius map;
};

struct ShapeReport {
  std::vector<ShapeMatch> matches;
  std::size_t candidates_tested = 0;
  bool no_invariant_map() const { return matches.empty(); }
  nlohmann::json to_json() const;
};

/// Maps psi_a: (X:Z) -> (Z : aX) and psi_{a,b}: (X:Z) -> (X + aZ : bX - Z) preserving Z.
/// Throws DomainError when 0 or infinity belongs to Z.
ShapeReport special_shape_invariance(std::vector<P1Point> zs);

}  // namespace weilcert
