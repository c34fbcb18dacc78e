#pragma once

// End-to-end pipelines and the JSON certificates they emit.

#include <string>
#include <vector>

#include <json.hpp>

namespace weilcert {

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr long kDefaultTBound = 100;

inline const std::string kVerdictObstructed = "not definable over Q";
inline const std::string kVerdictNoObstruction = "no obstruction found";
inline const std::string kVerdictInconclusive = "inconclusive";

/// Identifier of the full automorphism group claim for the plane family.
inline const std::string kPlaneAutAssumption = "paper-Thm-5-Aut";

enum class CheckStatus { pass, fail, assumed };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  nlohmann::json witness;
  bool gating = true;  // non-gating checks are reported but do not affect the verdict
  nlohmann::json to_json() const;
};

struct HyperRequest {
  long d = 0;
  int genus = 0;
  std::string t = "auto";
  std::string etas = "auto";  // "auto" or comma-separated elements
  long t_bound = kDefaultTBound;
};

struct PlaneRequest {
  long d = 0;
  int degree = 0;
  std::string t = "auto";
  std::string etas = "auto";
  long t_bound = kDefaultTBound;
};

/// Fermat curve X^d + Y^d + Z^d over Q(sqrt D) with h = identity.
struct ControlRequest {
  long d = 2;
  int degree = 4;
};

/// Invalid requests throw std::invalid_argument subclasses (DomainError,
/// ParseError) or PellUnsolvable before any certificate exists. Failures
/// inside the checks yield a certificate with verdict "inconclusive".
nlohmann::json run_hyper_pipeline(const HyperRequest& req);
nlohmann::json run_plane_pipeline(const PlaneRequest& req);
nlohmann::json run_control_pipeline(const ControlRequest& req);

/// Re-runs the pipeline named by the certificate's echoed inputs.
nlohmann::json rerun_certificate(const nlohmann::json& cert);

/// 2-space indent, sorted keys, trailing LF.
std::string serialize_certificate(const nlohmann::json& cert);

/// Comma-separated list of elements of Q(sqrt D).
std::vector<std::string> split_list(const std::string& text);

}  // namespace weilcert
