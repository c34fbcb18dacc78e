#include "weilcert/pgl.hpp"

#include <algorithm>
#include <set>

#include "weilcert/element_io.hpp"
#include "weilcert/errors.hpp"
#include "weilcert/linalg.hpp"

namespace weilcert {

P1Point::P1Point(TowerElt u, TowerElt v) : u_(std::move(u)), v_(std::move(v)) {
  if (!same_field(u_.field(), v_.field())) throw FieldMismatch("P1 point coordinates over different fields");
  if (v_.is_zero()) {
    if (u_.is_zero()) throw DomainError("(0 : 0) is not a point of P^1");
    u_ = TowerElt::one(u_.field());
  } else {
    u_ = u_ * v_.inverse();
    v_ = TowerElt::one(v_.field());
  }
}

const TowerElt& P1Point::value() const {
  if (is_infinity()) throw DomainError("infinity has no affine coordinate");
  return u_;
}

std::strong_ordering operator<=>(const P1Point& a, const P1Point& b) {
  if (a.is_infinity() != b.is_infinity()) return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.is_infinity()) return std::strong_ordering::equal;
  return a.u_ <=> b.u_;
}

std::string P1Point::to_string() const { return is_infinity() ? "inf" : u_.to_string(); }

namespace {

std::array<TowerElt, 4> canonical4(std::array<TowerElt, 4> m) {
  for (const auto& x : m) {
    if (!x.is_zero()) {
      TowerElt inv = x.inverse();
      for (auto& y : m) y *= inv;
      return m;
    }
  }
  throw DomainError("zero matrix");
}

}  // namespace

Moebius::Moebius(TowerElt a, TowerElt b, TowerElt c, TowerElt d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (const auto& x : m_)
    if (!same_field(m_[0].field(), x.field())) throw FieldMismatch("Moebius entries over different fields");
  if ((m_[0] * m_[3] - m_[1] * m_[2]).is_zero()) throw DomainError("singular Moebius matrix");
  m_ = canonical4(std::move(m_));
}

Moebius Moebius::identity(const FieldRef& f) {
  return Moebius(TowerElt::one(f), TowerElt(f), TowerElt(f), TowerElt::one(f));
}

Moebius Moebius::compose(const Moebius& o) const {
  return Moebius(a() * o.a() + b() * o.c(), a() * o.b() + b() * o.d(), c() * o.a() + d() * o.c(),
                 c() * o.b() + d() * o.d());
}

Moebius Moebius::inverse() const { return Moebius(d(), -b(), -c(), a()); }

std::strong_ordering operator<=>(const Moebius& x, const Moebius& y) {
  for (std::size_t i = 0; i < 4; ++i)
    if (auto c = x.m_[i] <=> y.m_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Moebius::to_string() const {
  return "[[" + a().to_string() + ", " + b().to_string() + "], [" + c().to_string() + ", " + d().to_string() + "]]";
}

nlohmann::json Moebius::to_json() const {
  return nlohmann::json::array({nlohmann::json::array({element_to_json(a()), element_to_json(b())}),
                                nlohmann::json::array({element_to_json(c()), element_to_json(d())})});
}

P1Point moebius_apply(const Moebius& m, const P1Point& p) {
  return P1Point(m.a() * p.u() + m.b() * p.v(), m.c() * p.u() + m.d() * p.v());
}

bool projective_equal(const Moebius& x, const Moebius& y) { return x == y; }

Moebius moebius_from_triple(const std::array<P1Point, 3>& src, const std::array<P1Point, 3>& dst) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (src[static_cast<std::size_t>(i)] == src[static_cast<std::size_t>(j)])
        throw DomainError("repeated point in source triple");
      if (dst[static_cast<std::size_t>(i)] == dst[static_cast<std::size_t>(j)])
        throw DomainError("repeated point in target triple");
    }
  // (a u + b v) y - (c u + d v) x = 0 for each (u : v) -> (x : y).
  Matrix sys;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = src[i];
    const auto& q = dst[i];
    sys.push_back({p.u() * q.v(), p.v() * q.v(), -(p.u() * q.u()), -(p.v() * q.u())});
  }
  auto basis = nullspace(std::move(sys));
  if (basis.size() != 1) throw DomainError("triple does not determine a unique Moebius map");
  const auto& v = basis[0];
  return Moebius(v[0], v[1], v[2], v[3]);
}

bool preserves_set(const Moebius& m, const std::vector<P1Point>& set) {
  std::vector<P1Point> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  std::vector<P1Point> image;
  image.reserve(set.size());
  for (const auto& p : set) {
    P1Point q = moebius_apply(m, p);
    if (!std::binary_search(sorted.begin(), sorted.end(), q)) return false;
    image.push_back(std::move(q));
  }
  std::sort(image.begin(), image.end());
  return std::adjacent_find(image.begin(), image.end()) == image.end();
}

std::vector<Moebius> finite_set_stabilizer(std::vector<P1Point> set) {
  if (set.size() < 3) throw DomainError("stabilizer needs at least three points");
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) throw DomainError("stabilizer input has repeated points");
  const std::array<P1Point, 3> base{set[0], set[1], set[2]};
  std::set<Moebius> found;
  const std::size_t n = set.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        Moebius m = moebius_from_triple(base, {set[i], set[j], set[k]});
        if (preserves_set(m, set)) found.insert(m);
      }
    }
  return {found.begin(), found.end()};
}

nlohmann::json ShapeReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : matches) {
    nlohmann::json e;
    e["shape"] = m.shape == SpecialShape::psi_a ? "psi_a" : "psi_ab";
    e["a"] = element_to_json(m.a);
    if (m.b) e["b"] = element_to_json(*m.b);
    e["map"] = m.map.to_json();
    arr.push_back(std::move(e));
  }
  return {{"candidates_tested", candidates_tested}, {"invariant_maps", arr}};
}

ShapeReport special_shape_invariance(std::vector<P1Point> zs) {
  if (zs.empty()) throw DomainError("special shape check needs a nonempty set");
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  const FieldRef f = zs[0].field();
  for (const auto& z : zs)
    if (z.is_infinity() || z.value().is_zero()) throw DomainError("special shapes act degenerately on 0 and infinity");

  ShapeReport report;
  std::set<Moebius> seen;
  auto record = [&](SpecialShape shape, const TowerElt& a, std::optional<TowerElt> b, const Moebius& m) {
    ++report.candidates_tested;
    if (seen.count(m) || !preserves_set(m, zs)) return;
    seen.insert(m);
    report.matches.push_back({shape, a, std::move(b), m});
  };

  const TowerElt zero(f), one = TowerElt::one(f);
  // psi_a is an involution, so z_i -> z_j forces a = 1 / (z_i z_j).
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i; j < zs.size(); ++j) {
      TowerElt a = (zs[i].value() * zs[j].value()).inverse();
      record(SpecialShape::psi_a, a, std::nullopt, Moebius(zero, one, a, zero));
    }

  // psi_{a,b}: z -> w gives a - (w z) b = -(w + z), linear in (a, b).
  auto row = [&](const TowerElt& z, const TowerElt& w) { return std::vector<TowerElt>{one, -(w * z)}; };
  auto rhs = [&](const TowerElt& z, const TowerElt& w) { return -(w + z); };
  auto try_ab = [&](const std::vector<TowerElt>& ab) {
    const TowerElt& a = ab[0];
    const TowerElt& b = ab[1];
    if ((-one - a * b).is_zero()) return;
    record(SpecialShape::psi_ab, a, b, Moebius(one, a, b, -one));
  };
  if (zs.size() >= 2) {
    const TowerElt& z1 = zs[0].value();
    const TowerElt& z2 = zs[1].value();
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = 0; j < zs.size(); ++j) {
        if (i == j) continue;
        const TowerElt& w1 = zs[i].value();
        const TowerElt& w2 = zs[j].value();
        auto sol = solve_linear({row(z1, w1), row(z2, w2)}, {rhs(z1, w1), rhs(z2, w2)});
        if (sol) {
          try_ab(*sol);
          continue;
        }
        // Degenerate pair: pin the map with a third point instead.
        if (zs.size() < 3) continue;
        const TowerElt& z3 = zs[2].value();
        for (std::size_t k = 0; k < zs.size(); ++k) {
          if (k == i || k == j) continue;
          const TowerElt& w3 = zs[k].value();
          auto s3 = solve_linear({row(z1, w1), row(z3, w3)}, {rhs(z1, w1), rhs(z3, w3)});
          if (!s3) s3 = solve_linear({row(z2, w2), row(z3, w3)}, {rhs(z2, w2), rhs(z3, w3)});
          if (s3) try_ab(*s3);
        }
      }
  }
  return report;
}

}  // namespace weilcert
