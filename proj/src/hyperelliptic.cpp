#include "weilcert/hyperelliptic.hpp"

#include <algorithm>
#include <numeric>

#include "weilcert/element_io.hpp"
#include "weilcert/errors.hpp"
#include "weilcert/pell.hpp"

namespace weilcert {

namespace {

Moebius canonical_moebius(const TowerElt& a, const TowerElt& b, const TowerElt& c, const TowerElt& d,
                          TowerElt* lambda) {
  for (const TowerElt* x : {&a, &b, &c, &d}) {
    if (!x->is_zero()) {
      *lambda = x->inverse();
      break;
    }
  }
  return Moebius(a, b, c, d);
}

}  // namespace

HypMap::HypMap(TowerElt a, TowerElt b, TowerElt c, TowerElt d, TowerElt scale, int genus)
    : moebius_(Moebius::identity(a.field())), scale_(std::move(scale)), genus_(genus) {
  if (scale_.is_zero()) throw DomainError("hyperelliptic map with zero scale");
  TowerElt lambda = TowerElt::one(a.field());
  moebius_ = canonical_moebius(a, b, c, d, &lambda);
  scale_ *= lambda.pow(genus + 1);
}

HypMap HypMap::identity(const FieldRef& f, int genus) {
  return HypMap(TowerElt::one(f), TowerElt(f), TowerElt(f), TowerElt::one(f), TowerElt::one(f), genus);
}

HypMap HypMap::hyperelliptic_involution(const FieldRef& f, int genus) {
  return HypMap(TowerElt::one(f), TowerElt(f), TowerElt(f), TowerElt::one(f), -TowerElt::one(f), genus);
}

nlohmann::json HypMap::to_json() const {
  return {{"moebius", moebius_.to_json()}, {"scale", element_to_json(scale_)}};
}

HyperellipticModel build_hyper(long d, int genus, const Rat& t, const std::vector<Quad>& etas) {
  if (genus < 2 || genus % 2 != 0) throw DomainError("genus must be an even integer >= 2");
  if (t.is_zero() || t == Rat(1) || t == Rat(-1)) throw DomainError("t must lie in Q \\ {0, 1, -1}");
  if (static_cast<int>(etas.size()) != genus - 1)
    throw DomainError("expected " + std::to_string(genus - 1) + " etas, got " + std::to_string(etas.size()));
  std::string reason;
  if (!hyperelliptic_etas_admissible(etas, d, &reason)) throw DomainError("inadmissible etas: " + reason);

  FieldRef f = FieldDesc::make(d, 1);
  HyperellipticModel model;
  model.field = f;
  model.genus = genus;
  model.t = t;
  model.etas = etas;

  const Quad s = Quad::sqrt_d(d);
  std::vector<TowerElt> roots{TowerElt(f, -t), TowerElt(f, -t.inverse()), TowerElt(f, -s), TowerElt(f, s.inverse())};
  for (const Quad& e : etas) {
    roots.emplace_back(f, e);
    roots.emplace_back(f, -e);
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) throw BranchCollision(roots[i].to_string(), roots[j].to_string());

  Poly p = Poly::constant(TowerElt::one(f));
  for (const auto& r : roots) {
    p *= Poly::linear_factor(r);
    model.branch_set.push_back(P1Point::finite(r));
  }
  model.branch_poly = p;
  std::sort(model.branch_set.begin(), model.branch_set.end());
  return model;
}

bool reduced_aut_is_trivial(const HyperellipticModel& model) {
  auto stab = finite_set_stabilizer(model.branch_set);
  return stab.size() == 1 && stab[0].is_identity();
}

namespace {

std::vector<Rat> height_level(long h) {
  std::vector<Rat> level;
  for (long q = 1; q < h; ++q)
    if (std::gcd(h, q) == 1) level.emplace_back(Rat(h, q));
  for (long p = h - 1; p >= 1; --p)
    if (std::gcd(p, h) == 1) level.emplace_back(Rat(p, h));
  const std::size_t positives = level.size();
  for (std::size_t i = 0; i < positives; ++i) level.push_back(-level[i]);
  return level;
}

}  // namespace

std::vector<Rat> enumerate_t(long bound) {
  std::vector<Rat> out;
  for (long h = 2; h <= bound; ++h) {
    auto level = height_level(h);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Rat find_good_t(long d, int genus, const std::vector<Quad>& etas, long bound) {
  if (bound < 2) throw DomainError("t search bound must be >= 2");
  for (long h = 2; h <= bound; ++h) {
    for (const Rat& t : height_level(h)) {
      try {
        HyperellipticModel model = build_hyper(d, genus, t, etas);
        if (reduced_aut_is_trivial(model)) return t;
      } catch (const BranchCollision&) {
      }
    }
  }
  throw DomainError("no admissible t of height <= " + std::to_string(bound));
}

bool hyper_iso_verify(const Poly& src, const Poly& dst, const HypMap& f, int genus) {
  const int n = 2 * genus + 2;
  if (src.degree() != n || dst.degree() != n)
    throw DomainError("hyperelliptic isomorphism check needs degree 2g+2 polynomials");
  const FieldRef& fld = src.field();
  const Moebius& m = f.moebius();
  Poly num(fld, {m.b(), m.a()});
  Poly den(fld, {m.d(), m.c()});
  // (c x + d)^n dst((a x + b)/(c x + d)) = sum_k dst_k num^k den^(n-k)
  Poly rhs(fld);
  for (int k = 0; k <= n; ++k) {
    if (dst.coeff(k).is_zero()) continue;
    rhs += num.pow(k) * den.pow(n - k) * dst.coeff(k);
  }
  Poly lhs = src * (f.scale() * f.scale());
  return lhs == rhs;
}

HypMap hyper_compose(const HypMap& f1, const HypMap& f2, int genus) {
  const Moebius& x = f1.moebius();
  const Moebius& y = f2.moebius();
  return HypMap(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
                x.c() * y.b() + x.d() * y.d(), f1.scale() * f2.scale(), genus);
}

HypMap hyper_inverse(const HypMap& f) {
  // Inverse matrix adj(M) = det(M) M^-1; scale 1/e, then rescaled by det^(g+1) through the identification.
  const Moebius& m = f.moebius();
  TowerElt det = m.a() * m.d() - m.b() * m.c();
  return HypMap(m.d(), -m.b(), -m.c(), m.a(), det.pow(f.genus() + 1) * f.scale().inverse(), f.genus());
}

HypMap conjugate_coeffs(const GaloisAut& aut, const HypMap& f) {
  const Moebius& m = f.moebius();
  return HypMap(apply_galois(aut, m.a()), apply_galois(aut, m.b()), apply_galois(aut, m.c()),
                apply_galois(aut, m.d()), apply_galois(aut, f.scale()), f.genus());
}

HypMap hyper_f_sigma(const HyperellipticModel& model) {
  const FieldRef& f = model.field;
  Quad prod = Quad::rational(1, f->d());
  for (const auto& e : model.etas) prod *= e;
  return HypMap(TowerElt(f), TowerElt::one(f), TowerElt::one(f), TowerElt(f), TowerElt(f, prod), model.genus);
}

HyperCocycleReport hyper_cocycle_scan(const HypMap& f_sigma, int genus) {
  const GaloisAut sigma = GaloisAut::sigma();
  HyperCocycleReport report;
  report.fails = true;
  const HypMap iota = HypMap::hyperelliptic_involution(f_sigma.field(), genus);
  for (const HypMap& f : {f_sigma, hyper_compose(iota, f_sigma, genus)}) {
    HypMap composite = hyper_compose(f, conjugate_coeffs(sigma, f), genus);
    bool id = composite.is_identity();
    if (id) report.fails = false;
    report.candidates.push_back({f, composite, id});
  }
  return report;
}

HyperCocycleReport hyper_cocycle_fails(const HyperellipticModel& model) {
  if (!reduced_aut_is_trivial(model))
    throw PreconditionError("reduced automorphism group not certified trivial; candidate set incomplete");
  return hyper_cocycle_scan(hyper_f_sigma(model), model.genus);
}

}  // namespace weilcert
