#include "weilcert/descent.hpp"

#include <algorithm>

#include "weilcert/errors.hpp"

namespace weilcert {

namespace {

const FieldRef& map_field(const IsoMap& m) {
  return std::visit([](const auto& x) -> const FieldRef& { return x.field(); }, m);
}

bool map_kind_matches(const CurvePayload& c, const IsoMap& m) {
  return std::holds_alternative<HyperCurve>(c) == std::holds_alternative<HypMap>(m);
}

IsoMap compose(const CurvePayload& c, const IsoMap& a, const IsoMap& b) {
  if (const auto* h = std::get_if<HyperCurve>(&c))
    return hyper_compose(std::get<HypMap>(a), std::get<HypMap>(b), h->genus);
  return std::get<ProjMap3>(a).compose(std::get<ProjMap3>(b));
}

IsoMap conjugate(const GaloisAut& aut, const IsoMap& m) {
  return std::visit([&](const auto& x) -> IsoMap { return conjugate_coeffs(aut, x); }, m);
}

bool is_identity(const IsoMap& m) {
  if (const auto* h = std::get_if<HypMap>(&m)) return h->is_identity();
  const auto& p = std::get<ProjMap3>(m);
  return projective_equal(p, ProjMap3::identity(p.field()));
}

bool equal(const IsoMap& a, const IsoMap& b) {
  if (a.index() != b.index()) return false;
  if (const auto* h = std::get_if<HypMap>(&a)) return *h == std::get<HypMap>(b);
  return projective_equal(std::get<ProjMap3>(a), std::get<ProjMap3>(b));
}

/// m maps the curve `src` onto the curve `dst`.
bool maps_onto(const CurvePayload& src, const CurvePayload& dst, const IsoMap& m) {
  if (const auto* hs = std::get_if<HyperCurve>(&src)) {
    const auto& hd = std::get<HyperCurve>(dst);
    return hyper_iso_verify(hs->p, hd.p, std::get<HypMap>(m), hs->genus);
  }
  // dst o m is proportional to src: points of src land on dst.
  return proportionality(substitute_linear(std::get<Form3>(dst), std::get<ProjMap3>(m)), std::get<Form3>(src))
      .has_value();
}

CurvePayload conjugate_curve(const GaloisAut& aut, const CurvePayload& c) {
  if (const auto* h = std::get_if<HyperCurve>(&c)) return HyperCurve{conjugate_coeffs(aut, h->p), h->genus};
  return conjugate_coeffs(aut, std::get<Form3>(c));
}

const FieldRef& curve_field(const CurvePayload& c) {
  if (const auto* h = std::get_if<HyperCurve>(&c)) return h->p.field();
  return std::get<Form3>(c).field();
}

}  // namespace

HypothesesResult hypotheses_check(const DescentProblem& pb) {
  HypothesesResult r;
  auto fail = [&](std::string why) { r.reasons.push_back(std::move(why)); };

  if (!same_field(curve_field(pb.curve), pb.field)) fail("curve coefficients outside the declared field");
  if (!same_field(map_field(pb.h), pb.field)) fail("h has entries outside the declared field");
  if (!map_kind_matches(pb.curve, pb.h)) fail("h does not match the curve type");
  if (pb.automorphisms.empty()) fail("automorphism list is empty");
  bool usable = r.reasons.empty();
  for (std::size_t i = 0; i < pb.automorphisms.size(); ++i) {
    const IsoMap& a = pb.automorphisms[i];
    const std::string tag = "automorphism " + std::to_string(i);
    if (!same_field(map_field(a), pb.field)) {
      fail(tag + " has entries outside the declared field");
      usable = false;
    } else if (!map_kind_matches(pb.curve, a)) {
      fail(tag + " does not match the curve type");
      usable = false;
    }
  }
  if (!usable) return r;

  for (std::size_t i = 0; i < pb.automorphisms.size(); ++i)
    if (!maps_onto(pb.curve, pb.curve, pb.automorphisms[i]))
      fail("automorphism " + std::to_string(i) + " does not preserve the curve");
  auto closed = [&] {
    for (const IsoMap& a : pb.automorphisms)
      for (const IsoMap& b : pb.automorphisms) {
        IsoMap ab = compose(pb.curve, a, b);
        if (std::none_of(pb.automorphisms.begin(), pb.automorphisms.end(),
                         [&](const IsoMap& c) { return equal(c, ab); }))
          return false;
      }
    return true;
  };
  if (!closed()) fail("automorphism list not closed under composition");
  if (!maps_onto(conjugate_curve(pb.sigma, pb.curve), pb.curve, pb.h))
    fail("h does not map the conjugate curve onto the curve");
  r.ok = r.reasons.empty();
  return r;
}

std::vector<CocycleEntry> cocycle_scan(const DescentProblem& pb) {
  HypothesesResult hyp = hypotheses_check(pb);
  if (!hyp.ok) throw PreconditionError("descent hypotheses fail: " + hyp.reasons.front());
  std::vector<CocycleEntry> out;
  for (const IsoMap& a : pb.automorphisms) {
    IsoMap f = compose(pb.curve, a, pb.h);
    IsoMap composite = compose(pb.curve, f, conjugate(pb.sigma, f));
    bool id = is_identity(composite);
    out.push_back({f, composite, id});
  }
  return out;
}

bool scan_fails(const std::vector<CocycleEntry>& entries) {
  return std::none_of(entries.begin(), entries.end(), [](const CocycleEntry& e) { return e.is_identity; });
}

nlohmann::json iso_to_json(const IsoMap& m) {
  if (const auto* h = std::get_if<HypMap>(&m)) return h->to_json();
  return matrix_to_json(std::get<ProjMap3>(m).matrix());
}

nlohmann::json scan_to_json(const std::vector<CocycleEntry>& entries) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries)
    out.push_back({{"candidate", iso_to_json(e.candidate)},
                   {"composite", iso_to_json(e.composite)},
                   {"is_identity", e.is_identity}});
  return out;
}

}  // namespace weilcert
