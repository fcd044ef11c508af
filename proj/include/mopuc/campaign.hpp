#pragma once

#include <string>
#include <vector>

#include "mopuc/json_io.hpp"

namespace mopuc {

// One expanded verification job.
struct CampaignJob {
  std::string name;
  std::string theorem;
  io::json params;  // inline parameters, {"file": ...} or {"random": {...}}
  std::string family;
  std::optional<std::size_t> j, k;
  std::optional<std::uint64_t> seed;
  std::size_t order = 12;
  double tolerance = tol::series;
  bool oracle = false;
  cplx beta{1.0, 0.0}, gamma{0.0, 0.0};
  std::string case_name;
};

struct CampaignConfig {
  std::string name;
  std::string base_dir;
  std::size_t threads = 1;
  std::vector<CampaignJob> jobs;
};

struct CampaignOutcome {
  io::json report;
  int exit_code = 0;  // 0 pass, 1 verification failure, 2 invalid input
};

// Parses and expands a campaign (list-valued seed/j/k/family fields expand as a product).
CampaignConfig parse_campaign(const io::json& j, const std::string& base_dir = ".");
CampaignConfig load_campaign(const std::string& path);
CampaignOutcome run_campaign(const CampaignConfig& cfg);

// Resolves a job's parameters (inline, file or seeded random).
SchurParameterSequence resolve_params(const io::json& spec, const std::string& base_dir, std::size_t default_length);
VerificationReport run_job(const CampaignJob& job, const std::string& base_dir);

}  // namespace mopuc
