#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mopuc/campaign.hpp"
#include "mopuc/cmv.hpp"
#include "mopuc/json_io.hpp"
#include "mopuc/khrushchev.hpp"
#include "mopuc/overlap.hpp"
#include "mopuc/random.hpp"
#include "mopuc/spectral.hpp"

using namespace mopuc;
using io::json;

namespace {

struct Globals {
  double tolerance = tol::series;
  std::size_t order = 16;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string out;
};

void emit(const Globals& g, const json& j) {
  if (g.out.empty()) std::cout << io::dump(j);
  else io::write_text_file(g.out, io::dump(j));
}

cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw InvariantError("bad complex number '" + s + "' (use re or re,im)");
  }
}

MatrixSeries read_series(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") {
    std::ifstream in(path);
    if (!in) throw InvariantError("cannot open '" + path + "'");
    return read_csv(in);
  }
  return io::series_from_json(io::read_json_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur functions, CMV and Hessenberg operators, and factorized first-return generating functions"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tolerance, "Verification tolerance");
  app.add_option("--order", g.order, "Series truncation order");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--threads", g.threads, "Worker threads for campaigns");
  app.add_option("--out", g.out, "Output file (default: stdout)");

  // cmv build
  auto* cmv = app.add_subcommand("cmv", "Build block CMV and Hessenberg matrices");
  cmv->require_subcommand(1);
  auto* cmv_build = cmv->add_subcommand("build", "Build an operator from Schur parameters");
  std::string family = "C", params_path;
  std::size_t blocks = 0;
  cmv_build->add_option("--family", family, "C, Chat, H or Hhat");
  cmv_build->add_option("--params", params_path, "Schur parameter JSON")->required();
  cmv_build->add_option("--blocks", blocks, "Number of blocks (padded window when there is no terminal)");

  // schur params | synthesize
  auto* schur = app.add_subcommand("schur", "Schur algorithm");
  schur->require_subcommand(1);
  auto* schur_params = schur->add_subcommand("params", "Schur parameters of a series");
  std::string series_path;
  std::size_t steps = 0;
  schur_params->add_option("--series", series_path, "Series as CSV (n,row,col,re,im) or JSON")->required();
  schur_params->add_option("--steps", steps, "Number of parameters (default: order + 1)");
  auto* schur_synth = schur->add_subcommand("synthesize", "Series of a parameter sequence");
  std::string csv_path;
  schur_synth->add_option("--params", params_path, "Schur parameter JSON")->required();
  schur_synth->add_option("--csv", csv_path, "Also write the coefficients as CSV");

  // walk return
  auto* walk = app.add_subcommand("walk", "Quantum walk return statistics");
  walk->require_subcommand(1);
  auto* walk_return = walk->add_subcommand("return", "First-return amplitudes and probabilities");
  std::string unitary_path, state_path, subspace = "0";
  std::size_t horizon = 64;
  walk_return->add_option("--unitary", unitary_path, "Unitary matrix JSON")->required();
  walk_return->add_option("--subspace", subspace, "Comma separated indices of V");
  walk_return->add_option("--state", state_path, "Unit vector in V (JSON)");
  walk_return->add_option("--horizon", horizon, "Number of steps");
  walk_return->add_option("--csv", csv_path, "Write n,p_n,cumulative as CSV");

  // overlap check | construct
  auto* overlap = app.add_subcommand("overlap", "Overlapping factorizations");
  overlap->require_subcommand(1);
  std::vector<std::string> partition;
  auto* ov_check = overlap->add_subcommand("check", "Test the overlap characterization");
  auto* ov_build = overlap->add_subcommand("construct", "Construct overlapping factors");
  for (auto* sc : {ov_check, ov_build}) {
    sc->add_option("--unitary", unitary_path, "Unitary matrix JSON")->required();
    sc->add_option("--partition", partition, "L=... C=... R=...")->required()->expected(1, 3);
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Check a factorization formula against the operator");
  std::string theorem;
  std::size_t j = 0, k = 0, d = 1, length = 0;
  bool oracle = false, terminal = false;
  std::string beta_s = "1", gamma_s = "0";
  verify->add_option("--theorem", theorem, "site, range, hessenberg, superposition, hessenberg-superposition")
      ->required();
  verify->add_option("--params", params_path, "Schur parameter JSON (default: seeded random)");
  verify->add_option("--family", family, "C, Chat, H or Hhat");
  verify->add_option("--j", j, "First block");
  verify->add_option("--k", k, "Last block");
  verify->add_option("--d", d, "Block size for random parameters");
  verify->add_option("--length", length, "Number of random parameters");
  verify->add_flag("--terminal", terminal, "Close random parameters with a unitary");
  verify->add_option("--beta", beta_s, "Superposition coefficient (re or re,im)");
  verify->add_option("--gamma", gamma_s, "Superposition coefficient (re or re,im)");
  verify->add_flag("--oracle", oracle, "Cross-check operator amplitudes by path enumeration");
  std::string report_path;
  verify->add_option("--report", report_path, "Report JSON path");

  // campaign run
  auto* campaign = app.add_subcommand("campaign", "Batches of verifications");
  campaign->require_subcommand(1);
  auto* campaign_run = campaign->add_subcommand("run", "Run a campaign file");
  std::string config_path;
  campaign_run->add_option("--config", config_path, "Campaign JSON")->required();

  for (auto* sc : {cmv, schur, walk, overlap, campaign, cmv_build, schur_params, schur_synth, walk_return, ov_check, ov_build, verify, campaign_run})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmv_build) {
      auto p = io::params_from_json(io::read_json_file(params_path));
      const Family fam = parse_family(family);
      if (!blocks) {
        if (!p.terminated()) throw InvariantError("--blocks is required without a terminal parameter");
        blocks = p.size() + 1;
      }
      const auto op = build_operator({std::move(p), fam, blocks});
      json j = io::to_json(op.matrix);
      j["block_dim"] = op.block_dim;
      j["n_blocks"] = op.n_blocks;
      j["padded"] = op.padded;
      j["family"] = family_name(fam);
      emit(g, j);
      return 0;
    }
    if (*schur_params) {
      const auto f = read_series(series_path);
      const auto p = schur_forward(f, steps ? steps : f.order() + 1);
      json j = io::to_json(p);
      j["schema_version"] = io::schema_version;
      emit(g, j);
      return 0;
    }
    if (*schur_synth) {
      const auto p = io::params_from_json(io::read_json_file(params_path));
      const auto f = synthesize(p, g.order);
      json j = io::to_json(f);
      j["schema_version"] = io::schema_version;
      j["seed_convention"] = synthesis_seed(p) == Seed::terminal ? "terminal" : "zero beyond known parameters";
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write '" + csv_path + "'");
        write_csv(out, f);
      }
      emit(g, j);
      return 0;
    }
    if (*walk_return) {
      const Matrix u = io::matrix_from_json(io::read_json_file(unitary_path));
      if (u.rows() != u.cols()) throw InvariantError("unitary must be square");
      if (!is_unitary(u).ok) throw InvariantError("matrix is not unitary");
      const auto v = io::parse_index_list(subspace, u.rows());
      Vector psi = Vector::Zero(v.size());
      if (state_path.empty()) psi(0) = 1.0;
      else psi = io::vector_from_json(io::read_json_file(state_path));
      const auto st = return_statistics(u, v, psi, horizon);
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write '" + csv_path + "'");
        out.precision(17);
        out << "n,p,cumulative\n";
        for (std::size_t n = 0; n < horizon; ++n)
          out << n + 1 << ',' << st.probability[n] << ',' << st.cumulative[n] << '\n';
      }
      emit(g, {{"schema_version", io::schema_version},
               {"horizon", horizon},
               {"return_probability", st.cumulative.empty() ? 0.0 : st.cumulative.back()},
               {"partial_expected_time", st.partial_expected_time},
               {"probabilities", st.probability}});
      return 0;
    }
    if (*ov_check || *ov_build) {
      const Matrix u = io::matrix_from_json(io::read_json_file(unitary_path));
      if (u.rows() != u.cols()) throw InvariantError("unitary must be square");
      const auto part = io::parse_partition(partition, u.rows());
      if (*ov_check) {
        const auto v = check_overlap(u, part);
        emit(g, io::to_json(v));
        return v.overlapping ? 0 : 1;
      }
      emit(g, io::to_json(construct_overlap(u, part)));
      return 0;
    }
    if (*verify) {
      if (!app.count("--order")) g.order = 12;
      const bool has_k = verify->count("--k") > 0;
      const std::size_t last = has_k ? std::max(j, k) : j + 1;
      SchurParameterSequence p;
      if (!params_path.empty()) p = io::params_from_json(io::read_json_file(params_path));
      else p = random_parameters(d, length ? length : required_blocks(last, g.order + 1), g.seed, terminal);
      VerifyOptions opt{g.order, g.tolerance, oracle};
      VerificationReport r;
      if (theorem == "site") r = verify_site_formula(p, parse_family(family), j, opt);
      else if (theorem == "range") r = verify_range_formula(p, parse_family(family), j, has_k ? k : j + 1, opt);
      else if (theorem == "hessenberg") {
        const Family fam = verify->count("--family") ? parse_family(family) : Family::hessenberg;
        r = verify_hessenberg_formula(p, fam, j, has_k ? k : j + 1, opt);
      } else if (theorem == "superposition")
        r = verify_superposition(p, j, parse_complex(beta_s), parse_complex(gamma_s), opt);
      else if (theorem == "hessenberg-superposition")
        r = verify_hessenberg_superposition(p, j, parse_complex(beta_s), parse_complex(gamma_s), opt);
      else throw InvariantError("unknown theorem '" + theorem + "'");
      if (params_path.empty()) r.seed = g.seed;
      json j = {{"schema_version", io::schema_version}, {"report", io::to_json(r)}};
      if (!report_path.empty()) io::write_text_file(report_path, io::dump(j));
      emit(g, j);
      return r.pass ? 0 : 1;
    }
    if (*campaign_run) {
      auto cfg = load_campaign(config_path);
      if (app.count("--threads")) cfg.threads = g.threads;
      const auto outcome = run_campaign(cfg);
      emit(g, outcome.report);
      return outcome.exit_code;
    }
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
