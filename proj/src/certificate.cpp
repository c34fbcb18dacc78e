#include "weilcert/certificate.hpp"

#include <functional>
#include <optional>

#include "weilcert/descent.hpp"
#include "weilcert/element_io.hpp"
#include "weilcert/errors.hpp"
#include "weilcert/hyperelliptic.hpp"
#include "weilcert/pell.hpp"
#include "weilcert/plane.hpp"

namespace weilcert {

using nlohmann::json;

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::assumed: return "assumed";
  }
  return "fail";
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

json quads_to_json(const std::vector<Quad>& xs) {
  json out = json::array();
  for (const Quad& q : xs) out.push_back(q.to_string());
  return out;
}

json scan_with_shapes(const std::vector<CocycleEntry>& entries) {
  json out = scan_to_json(entries);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto* p = std::get_if<ProjMap3>(&entries[i].composite);
    if (!p) continue;
    const Matrix& m = p->matrix();
    bool diagonal = true;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (r != c && !m[r][c].is_zero()) diagonal = false;
    out[i]["zero_diagonal"] = m[0][0].is_zero() && m[2][2].is_zero();
    out[i]["diagonal"] = diagonal;
  }
  return out;
}

// Accumulates checks; an exception inside a step ends the run as inconclusive.
class Run {
 public:
  Run(std::string family, json inputs, json params)
      : family_(std::move(family)), inputs_(std::move(inputs)), params_(std::move(params)) {}

  template <typename F>
  bool step(const std::string& name, F&& body) {
    if (aborted_) return false;
    try {
      Check c = body();
      c.name = name;
      checks_.push_back(std::move(c));
      return true;
    } catch (const std::exception& e) {
      checks_.push_back({name, CheckStatus::fail, json{{"error", e.what()}}, true});
      aborted_ = true;
      return false;
    }
  }

  void assume(const std::string& a) { assumptions_.push_back(a); }
  void set_obstruction(bool obstructed) { obstruction_ = obstructed; }

  json finish() const {
    json checks = json::array();
    bool gating_ok = true;
    for (const Check& c : checks_) {
      checks.push_back(c.to_json());
      if (c.gating && c.status == CheckStatus::fail && c.name != "cocycle_obstruction") gating_ok = false;
    }
    std::string verdict = kVerdictInconclusive;
    if (!aborted_ && gating_ok && obstruction_)
      verdict = *obstruction_ ? kVerdictObstructed : kVerdictNoObstruction;
    return {{"schema_version", kCertificateSchemaVersion},
            {"family", family_},
            {"inputs", inputs_},
            {"params", params_},
            {"checks", checks},
            {"assumptions", assumptions_},
            {"verdict", verdict}};
  }

 private:
  std::string family_;
  json inputs_, params_;
  std::vector<Check> checks_;
  std::vector<std::string> assumptions_;
  std::optional<bool> obstruction_;
  bool aborted_ = false;
};

std::vector<Quad> parse_etas(const std::string& text, long d) {
  std::vector<Quad> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_quad(item, d));
  return out;
}

// Records the scan and whether it failed globally; the candidate count must equal |Aut|.
void scan_step(Run& run, const DescentProblem& pb, const std::function<void(json&)>& decorate = {}) {
  run.step("descent_hypotheses", [&] {
    HypothesesResult h = hypotheses_check(pb);
    return Check{"", pass_if(h.ok), json{{"reasons", h.reasons}, {"automorphism_count", pb.automorphisms.size()}}};
  });
  run.step("cocycle_obstruction", [&] {
    auto entries = cocycle_scan(pb);
    if (entries.size() != pb.automorphisms.size()) throw PreconditionError("scan did not cover every candidate");
    bool fails = scan_fails(entries);
    json w{{"automorphism_count", pb.automorphisms.size()},
           {"candidate_count", entries.size()},
           {"candidates", scan_with_shapes(entries)},
           {"all_candidates_fail", fails}};
    if (decorate) decorate(w);
    run.set_obstruction(fails);
    return Check{"", pass_if(fails), w};
  });
}

}  // namespace

json Check::to_json() const {
  json j{{"name", name}, {"status", status_name(status)}, {"witness", witness}};
  if (!gating) j["gating"] = false;
  return j;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty list item", start);
    out.push_back(item.substr(b, e - b + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

json run_hyper_pipeline(const HyperRequest& req) {
  FieldDesc::make(req.d);
  if (req.genus < 2 || req.genus % 2 != 0) throw DomainError("genus must be an even integer >= 2");
  std::vector<Quad> etas = req.etas == "auto" ? select_etas(req.d, FamilyKind::hyperelliptic, req.genus - 1).etas
                                              : parse_etas(req.etas, req.d);
  Rat t = req.t == "auto" ? find_good_t(req.d, req.genus, etas, req.t_bound) : Rat::from_string(req.t);
  HyperellipticModel model = build_hyper(req.d, req.genus, t, etas);

  json inputs{{"command", "hyper"}, {"D", req.d}, {"genus", req.genus}, {"t", req.t}, {"etas", req.etas}};
  if (req.t == "auto") inputs["t_bound"] = req.t_bound;
  Run run("hyperelliptic", inputs,
          json{{"D", req.d}, {"g", req.genus}, {"t", t.to_string()}, {"etas", quads_to_json(etas)}});
  const int g = model.genus;
  const FieldRef& fld = model.field;

  run.step("parameters", [&] {
    return Check{"", CheckStatus::pass, json{{"genus_even", true}, {"t", t.to_string()}, {"unit_count", etas.size()}}};
  });
  run.step("pell_norms", [&] {
    std::string reason;
    bool ok = hyperelliptic_etas_admissible(etas, req.d, &reason);
    json norms = json::array();
    for (const Quad& e : etas) norms.push_back(e.norm().to_string());
    json w{{"norms", norms}};
    if (!ok) w["reason"] = reason;
    return Check{"", pass_if(ok), w};
  });
  run.step("branch_points", [&] {
    json pts = json::array();
    for (const P1Point& p : model.branch_set) pts.push_back(p.to_string());
    bool ok = static_cast<int>(model.branch_set.size()) == 2 * g + 2 && is_square_free(model.branch_poly);
    return Check{"", pass_if(ok), json{{"points", pts}, {"distinct", ok}}};
  });
  run.step("reduced_automorphism_group", [&] {
    auto stab = finite_set_stabilizer(model.branch_set);
    json maps = json::array();
    for (const Moebius& m : stab) maps.push_back(m.to_json());
    bool ok = stab.size() == 1 && stab[0].is_identity();
    return Check{"", pass_if(ok), json{{"stabilizer_size", stab.size()}, {"stabilizer", maps}}};
  });
  const HypMap f_sigma = hyper_f_sigma(model);
  run.step("f_sigma_isomorphism", [&] {
    Poly conj = conjugate_coeffs(GaloisAut::sigma(), model.branch_poly);
    bool ok = hyper_iso_verify(conj, model.branch_poly, f_sigma, g);
    return Check{"", pass_if(ok), json{{"f_sigma", f_sigma.to_json()}, {"e", element_to_json(f_sigma.scale())}}};
  });

  DescentProblem pb{fld, HyperCurve{model.branch_poly, g},
                    {HypMap::identity(fld, g), HypMap::hyperelliptic_involution(fld, g)}, f_sigma,
                    GaloisAut::sigma()};
  scan_step(run, pb, [&](json& w) {
    HyperCocycleReport module = hyper_cocycle_scan(f_sigma, g);
    w["family_scan_fails"] = module.fails;
  });
  return run.finish();
}

json run_plane_pipeline(const PlaneRequest& req) {
  FieldDesc::make(req.d);
  if (req.degree < 4 || req.degree % 4 != 0) throw DomainError("plane degree must be a positive multiple of 4");
  if (req.degree > kMaxFormDegree) throw DomainError("plane degree too large");
  const int m = req.degree / 4;
  std::vector<Quad> etas =
      req.etas == "auto" ? select_etas(req.d, FamilyKind::plane, m).etas : parse_etas(req.etas, req.d);
  Rat t = req.t == "auto" ? find_plane_t(req.d, req.degree, etas, req.t_bound) : Rat::from_string(req.t);
  PlaneCurveForm c = build_plane(req.d, req.degree, t, etas);

  json inputs{{"command", "plane"}, {"D", req.d}, {"d", req.degree}, {"t", req.t}, {"etas", req.etas}};
  if (req.t == "auto") inputs["t_bound"] = req.t_bound;
  json params{{"D", req.d}, {"d", req.degree}, {"t", t.to_string()}, {"etas", quads_to_json(etas)}};
  if (c.alpha) params["alpha"] = element_to_json(*c.alpha);
  Run run("plane", inputs, params);
  const FieldRef& fld = c.field;
  const int n = c.tower_order();

  run.step("parameters", [&] {
    return Check{"", CheckStatus::pass, json{{"d", req.degree}, {"m", m}, {"tower_order", n}, {"t", t.to_string()}}};
  });
  run.step("pell_norms", [&] {
    bool ok = true;
    json norms = json::array();
    for (const Quad& e : etas) {
      norms.push_back(e.norm().to_string());
      ok = ok && e.norm() == Rat(-1);
    }
    return Check{"", pass_if(ok), json{{"norms", norms}, {"exponents", c.exponents}}};
  });
  run.step("alpha", [&] {
    Quad prod = Quad::rational(Rat(1), req.d);
    for (const Quad& e : etas) prod *= e;
    TowerElt lhs = c.alpha->pow(n);
    TowerElt rhs(fld, prod * prod);
    return Check{"", pass_if(lhs == rhs),
                 json{{"alpha", element_to_json(*c.alpha)}, {"alpha_power", element_to_json(lhs)},
                      {"unit_product_squared", element_to_json(rhs)}}};
  });
  run.step("smoothness", [&] {
    SmoothnessReport s = smoothness_check(c);
    return Check{"", pass_if(s.verdict()), s.to_json()};
  });
  run.step("genus", [&] {
    return Check{"", CheckStatus::pass, json{{"genus", genus_of_degree(req.degree)}}};
  });
  PsiReport psi;
  run.step("psi_automorphism", [&] {
    psi = psi_report(c);
    return Check{"", pass_if(psi.ok(n)),
                 json{{"psi", matrix_to_json(plane_psi(c).matrix())},
                      {"preserves_form", psi.preserves_form},
                      {"order", psi.order}}};
  });
  run.step("condition_ii", [&] {
    ConditionIIReport r = condition_ii_report(c);
    return Check{"", pass_if(r.holds()), r.to_json(), false};
  });
  std::optional<BitangentReport> bit;
  if (req.degree == 4) {
    run.step("bitangent_discriminant", [&] {
      bit = bitangent_discriminant(c);
      return Check{"", pass_if(bit->degree == 4 && bit->square_free),
                   json{{"p", bit->p.to_string()}, {"degree", bit->degree}, {"square_free", bit->square_free}}};
    });
  }
  run.step("automorphism_group", [&] {
    json evidence{{"psi_membership", psi.ok(n)}};
    if (bit) evidence["bitangent_count"] = bit->square_free ? bit->degree : -1;
    return Check{"", CheckStatus::assumed,
                 json{{"assumption", kPlaneAutAssumption},
                      {"claim", "Aut is cyclic of order " + std::to_string(n) + " generated by psi"},
                      {"evidence", evidence}}};
  });
  run.assume(kPlaneAutAssumption);
  const ProjMap3 a_sigma = plane_a_sigma(fld, *c.alpha);
  SigmaIsoReport iso;
  run.step("sigma_isomorphism", [&] {
    iso = sigma_iso_report(c, *c.alpha);
    json w{{"a_sigma", matrix_to_json(a_sigma.matrix())}};
    if (iso.lambda) w["lambda"] = element_to_json(*iso.lambda);
    return Check{"", pass_if(iso.sigma_iso), w};
  });
  run.step("tau_invariance", [&] {
    return Check{"", pass_if(iso.tau_invariant), json{{"exponents", units_mod(n)}}};
  });

  std::vector<IsoMap> autos;
  const ProjMap3 psi_map = plane_psi(c);
  ProjMap3 power = ProjMap3::identity(fld);
  for (int k = 0; k < n; ++k) {
    autos.push_back(power);
    power = power.compose(psi_map);
  }
  DescentProblem pb{fld, c.form, autos, a_sigma, GaloisAut::sigma()};
  scan_step(run, pb, [&](json& w) { w["family_scan_fails"] = plane_cocycle_fails(c).fails; });
  return run.finish();
}

json run_control_pipeline(const ControlRequest& req) {
  FieldRef fld = FieldDesc::make(req.d);
  if (req.degree < 1 || req.degree > kMaxFormDegree) throw DomainError("control degree out of range");
  const TowerElt one = TowerElt::one(fld);
  Form3 f = Form3::monomial(one, {req.degree, 0, 0}) + Form3::monomial(one, {0, req.degree, 0}) +
            Form3::monomial(one, {0, 0, req.degree});
  Run run("control", json{{"command", "control"}, {"D", req.d}, {"d", req.degree}},
          json{{"D", req.d}, {"d", req.degree}, {"etas", json::array()}, {"t", "0"}});
  const ProjMap3 id = ProjMap3::identity(fld);
  run.step("parameters", [&] {
    return Check{"", CheckStatus::pass, json{{"form", form_to_json(f)}}};
  });
  run.step("sigma_isomorphism", [&] {
    auto lambda = conjugate_isomorphism_factor(f, id, GaloisAut::sigma());
    json w{{"a_sigma", matrix_to_json(id.matrix())}};
    if (lambda) w["lambda"] = element_to_json(*lambda);
    return Check{"", pass_if(lambda.has_value()), w};
  });
  DescentProblem pb{fld, f, {id}, id, GaloisAut::sigma()};
  scan_step(run, pb);
  return run.finish();
}

json rerun_certificate(const json& cert) {
  const json& in = cert.at("inputs");
  const std::string cmd = in.at("command").get<std::string>();
  if (cmd == "hyper") {
    HyperRequest r{in.at("D").get<long>(), in.at("genus").get<int>(), in.at("t").get<std::string>(),
                   in.at("etas").get<std::string>(), in.value("t_bound", kDefaultTBound)};
    return run_hyper_pipeline(r);
  }
  if (cmd == "plane") {
    PlaneRequest r{in.at("D").get<long>(), in.at("d").get<int>(), in.at("t").get<std::string>(),
                   in.at("etas").get<std::string>(), in.value("t_bound", kDefaultTBound)};
    return run_plane_pipeline(r);
  }
  if (cmd == "control") return run_control_pipeline({in.at("D").get<long>(), in.at("d").get<int>()});
  throw DomainError("unknown certificate command: " + cmd);
}

std::string serialize_certificate(const json& cert) { return cert.dump(2) + "\n"; }

}  // namespace weilcert
