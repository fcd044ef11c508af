#include "mopuc/campaign.hpp"

#include <atomic>
#include <filesystem>
#include <thread>

#include "mopuc/khrushchev.hpp"
#include "mopuc/random.hpp"
#include "mopuc/reference_cases.hpp"

namespace mopuc {

namespace {

using io::json;

const std::vector<std::string> theorems{"site", "range", "hessenberg", "superposition", "hessenberg-superposition",
                                        "example"};

std::vector<json> as_list(const json& v) {
  if (v.is_array()) return std::vector<json>(v.begin(), v.end());
  return {v};
}

// An object {"from": a, "to": b} expands to the inclusive integer range.
std::vector<json> expand_values(const json& job, const char* key) {
  if (!job.contains(key)) return {json(nullptr)};
  const json& v = job[key];
  if (v.is_object() && v.contains("from") && v.contains("to")) {
    std::vector<json> out;
    for (long long i = v["from"].get<long long>(); i <= v["to"].get<long long>(); ++i) out.push_back(i);
    return out;
  }
  return as_list(v);
}

std::optional<std::size_t> opt_size(const json& v, const char* what) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InvariantError(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

cplx complex_field(const json& job, const char* key, cplx fallback) {
  if (!job.contains(key)) return fallback;
  const json& v = job[key];
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  throw InvariantError(std::string(key) + " must be a number or [re, im]");
}

}  // namespace

CampaignConfig parse_campaign(const json& j, const std::string& base_dir) {
  CampaignConfig cfg;
  cfg.base_dir = base_dir;
  try {
    if (!j.is_object()) throw InvariantError("campaign must be an object");
    if (j.value("schema_version", io::schema_version) != io::schema_version)
      throw InvariantError("unsupported campaign schema version");
    cfg.name = j.value("name", std::string("campaign"));
    cfg.threads = j.value("threads", std::size_t{1});
    const json defaults = j.value("defaults", json::object());
    if (!j.contains("jobs")) return cfg;
    if (!j["jobs"].is_array()) throw InvariantError("jobs must be a list");
    std::size_t index = 0;
    for (const auto& raw : j["jobs"]) {
      json job = defaults;
      if (!raw.is_object()) throw InvariantError("each job must be an object");
      for (auto it = raw.begin(); it != raw.end(); ++it) job[it.key()] = it.value();
      const std::string theorem = job.value("theorem", std::string());
      if (std::find(theorems.begin(), theorems.end(), theorem) == theorems.end())
        throw InvariantError("job " + std::to_string(index) + ": unknown theorem '" + theorem + "'");
      const std::string base = job.value("name", theorem + "-" + std::to_string(index));
      if (job.contains("params") && job["params"].is_object() && job["params"].contains("random") &&
          !job.contains("seed") && !job["params"]["random"].contains("seed"))
        throw InvariantError("job " + std::to_string(index) + ": random parameters need an explicit seed");
      for (const auto& fam : expand_values(job, "family"))
        for (const auto& seed : expand_values(job, "seed"))
          for (const auto& jj : expand_values(job, "j"))
            for (const auto& kk : expand_values(job, "k")) {
              CampaignJob c;
              c.name = base;
              c.theorem = theorem;
              c.params = job.value("params", json(nullptr));
              c.family = fam.is_null() ? (theorem.rfind("hessenberg", 0) == 0 ? "H" : "C") : fam.get<std::string>();
              c.j = opt_size(jj, "j");
              c.k = opt_size(kk, "k");
              if (!seed.is_null()) c.seed = seed.get<std::uint64_t>();
              c.order = job.value("order", std::size_t{12});
              c.tolerance = job.value("tolerance", tol::series);
              c.oracle = job.value("oracle", false);
              c.beta = complex_field(job, "beta", {1.0, 0.0});
              c.gamma = complex_field(job, "gamma", {0.0, 0.0});
              c.case_name = job.value("case", std::string());
              cfg.jobs.push_back(std::move(c));
            }
      ++index;
    }
  } catch (const json::exception& e) {
    throw InvariantError(std::string("malformed campaign: ") + e.what());
  }
  return cfg;
}

CampaignConfig load_campaign(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path().string();
  return parse_campaign(io::read_json_file(path), dir.empty() ? "." : dir);
}

SchurParameterSequence resolve_params(const json& spec, const std::string& base_dir, std::size_t default_length) {
  if (spec.is_null()) throw InvariantError("job needs params");
  if (spec.contains("file")) {
    std::filesystem::path p = spec["file"].get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return io::params_from_json(io::read_json_file(p.string()));
  }
  if (spec.contains("random")) {
    const json& r = spec["random"];
    return random_parameters(r.value("d", std::size_t{1}), r.value("length", default_length),
                             r.value("seed", std::uint64_t{0}), r.value("terminal", false));
  }
  return io::params_from_json(spec);
}

VerificationReport run_job(const CampaignJob& job, const std::string& base_dir) {
  if (job.theorem == "example") {
    auto r = cases::verify(job.case_name, job.order, job.tolerance);
    r.seed = job.seed;
    return r;
  }
  VerifyOptions opt{job.order, job.tolerance, job.oracle};
  const std::size_t j = job.j.value_or(0);
  const std::size_t k = job.k.value_or(j + 1);
  json spec = job.params;
  if (job.seed && spec.is_object() && spec.contains("random")) spec["random"]["seed"] = *job.seed;
  const auto p = resolve_params(spec, base_dir, required_blocks(std::max(j, k), job.order + 1));
  const Family fam = parse_family(job.family);
  VerificationReport r;
  if (job.theorem == "site") r = verify_site_formula(p, fam, j, opt);
  else if (job.theorem == "range") r = verify_range_formula(p, fam, j, k, opt);
  else if (job.theorem == "hessenberg") r = verify_hessenberg_formula(p, fam, j, k, opt);
  else if (job.theorem == "superposition") r = verify_superposition(p, j, job.beta, job.gamma, opt);
  else r = verify_hessenberg_superposition(p, j, job.beta, job.gamma, opt);
  r.seed = job.seed;
  return r;
}

CampaignOutcome run_campaign(const CampaignConfig& cfg) {
  const std::size_t n = cfg.jobs.size();
  std::vector<json> results(n);
  std::vector<int> status(n, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const auto& job = cfg.jobs[i];
      try {
        auto r = run_job(job, cfg.base_dir);
        results[i] = io::to_json(r);
        status[i] = r.pass ? 0 : 1;
      } catch (const InvariantError& e) {
        results[i] = {{"theorem", job.theorem}, {"error", e.what()}, {"pass", false}};
        status[i] = 2;
      } catch (const std::exception& e) {
        results[i] = {{"theorem", job.theorem}, {"error", e.what()}, {"pass", false}};
        status[i] = 1;
      }
      results[i]["job"] = job.name;
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, n));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t passed = 0, failed = 0, errors = 0;
  for (int s : status) (s == 0 ? passed : s == 1 ? failed : errors)++;
  CampaignOutcome out;
  out.exit_code = errors ? 2 : failed ? 1 : 0;
  out.report = {{"schema_version", io::schema_version},
                {"campaign", cfg.name},
                {"summary", {{"jobs", n}, {"passed", passed}, {"failed", failed}, {"errors", errors}}},
                {"results", results}};
  return out;
}

}  // namespace mopuc
