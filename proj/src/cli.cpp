#include "weilcert/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weilcert/certificate.hpp"
#include "weilcert/errors.hpp"
#include "weilcert/pell.hpp"

namespace weilcert {

namespace {

void print_summary(const nlohmann::json& cert, std::ostream& out) {
  out << "family: " << cert.at("family").get<std::string>() << "\n";
  for (const auto& c : cert.at("checks"))
    out << "  " << c.at("name").get<std::string>() << ": " << c.at("status").get<std::string>() << "\n";
  for (const auto& a : cert.at("assumptions")) out << "assumption: " << a.get<std::string>() << "\n";
  out << "verdict: " << cert.at("verdict").get<std::string>() << "\n";
}

int emit(const nlohmann::json& cert, const std::string& path, std::ostream& out, std::ostream& err) {
  const std::string text = serialize_certificate(cert);
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      err << "cannot write " << path << "\n";
      return kExitInvalidInput;
    }
    f << text;
    print_summary(cert, out);
  }
  return cert.at("verdict") == kVerdictInconclusive ? kExitInconclusive : kExitOk;
}

int verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot read " << path << "\n";
    return kExitInvalidInput;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string stored = buf.str();
  nlohmann::json cert;
  try {
    cert = nlohmann::json::parse(stored);
  } catch (const nlohmann::json::exception& e) {
    err << "malformed certificate: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  const std::string fresh = serialize_certificate(rerun_certificate(cert));
  if (fresh == stored) {
    out << "certificate reproduced\n";
    return kExitOk;
  }
  std::size_t pos = 0;
  while (pos < fresh.size() && pos < stored.size() && fresh[pos] == stored[pos]) ++pos;
  out << "certificate mismatch at byte " << pos << "\n";
  return kExitMismatch;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for curves whose field of moduli is not a field of definition", "weilcert"};
  app.require_subcommand(1);

  long pell_d = 0;
  auto* pell = app.add_subcommand("pell", "fundamental solution of a^2 - D b^2 = -1");
  pell->add_option("--D", pell_d, "square-free D > 1")->required();

  HyperRequest hreq;
  std::string hyper_out;
  auto* hyper = app.add_subcommand("hyper", "hyperelliptic family certificate");
  hyper->add_option("--D", hreq.d)->required();
  hyper->add_option("--genus", hreq.genus)->required();
  hyper->add_option("--t", hreq.t, "rational or auto")->capture_default_str();
  hyper->add_option("--etas", hreq.etas, "auto or comma-separated elements")->capture_default_str();
  hyper->add_option("--t-bound", hreq.t_bound, "height bound for --t auto")->capture_default_str();
  hyper->add_option("--emit-cert", hyper_out, "certificate path (stdout when absent)");

  PlaneRequest preq;
  std::string plane_out;
  auto* plane = app.add_subcommand("plane", "plane family certificate");
  plane->add_option("--D", preq.d)->required();
  plane->add_option("--d", preq.degree, "degree, a multiple of 4")->required();
  plane->add_option("--t", preq.t, "rational or auto")->capture_default_str();
  plane->add_option("--etas", preq.etas, "auto or comma-separated elements")->capture_default_str();
  plane->add_option("--t-bound", preq.t_bound, "height bound for --t auto")->capture_default_str();
  plane->add_option("--emit-cert", plane_out, "certificate path (stdout when absent)");

  ControlRequest creq;
  std::string control_out;
  auto* control = app.add_subcommand("control", "Fermat curve positive control");
  control->add_option("--D", creq.d)->capture_default_str();
  control->add_option("--d", creq.degree)->capture_default_str();
  control->add_option("--emit-cert", control_out, "certificate path (stdout when absent)");

  std::string cert_path;
  auto* ver = app.add_subcommand("verify", "re-run a certificate and compare bytes");
  ver->add_option("cert", cert_path)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*pell) {
      auto sol = solve_negative_pell(pell_d);
      if (!sol) {
        out << "none\n";
        return kExitNoPell;
      }
      out << "a=" << sol->a.get_str() << " b=" << sol->b.get_str() << "\n";
      return kExitOk;
    }
    if (*hyper) return emit(run_hyper_pipeline(hreq), hyper_out, out, err);
    if (*plane) return emit(run_plane_pipeline(preq), plane_out, out, err);
    if (*control) return emit(run_control_pipeline(creq), control_out, out, err);
    if (*ver) return verify(cert_path, out, err);
  } catch (const PellUnsolvable& e) {
    err << e.what() << "\n";
    return kExitNoPell;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid certificate: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconclusive;
  }
  return kExitInvalidInput;
}

}  // namespace weilcert
