// Copyright 2026 the noisyrec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// noisyrec: construct, evaluate, sweep, and verify finite statistical
// experiments for welfare-optimal binary recommendation under measurement
// noise. Exit codes: 0 success, 1 domain/range error, 2 usage error,
// 3 verification failure.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "noisyrec/allocation.hpp"
#include "noisyrec/constructions.hpp"
#include "noisyrec/experiment.hpp"
#include "noisyrec/gaussian.hpp"
#include "noisyrec/io.hpp"
#include "noisyrec/montecarlo.hpp"
#include "noisyrec/region.hpp"
#include "noisyrec/symmetry.hpp"
#include "noisyrec/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;
constexpr int kExitVerifyFailed = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NOISYREC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw noisyrec::OutOfRange("NOISYREC_SEED is not an unsigned integer");
    }
  }
  return 42;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw noisyrec::Error("cannot open output file: " + path);
  }
  out << content;
}

noisyrec::TieBreak parse_tie_break(const std::string& name) {
  if (name == "favor-minority") return noisyrec::TieBreak::FavorMinority;
  if (name == "favor-majority") return noisyrec::TieBreak::FavorMajority;
  throw CLI::ValidationError(
      "--tie-break must be favor-minority or favor-majority");
}

std::vector<double> parse_kappa_flags(const std::vector<double>& kappas,
                                      const std::string& grid_spec) {
  std::vector<double> grid = kappas;
  if (!grid_spec.empty()) {
    double start = 0.0, step = 0.0, stop = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream in(grid_spec);
    if (!(in >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' ||
        step <= 0.0) {
      throw CLI::ValidationError(
          "--kappa-grid must look like start:step:stop with positive step");
    }
    for (int k = 0;; ++k) {
      const double kappa = start + k * step;
      if (kappa > stop + 1e-12) break;
      grid.push_back(kappa);
    }
  }
  return grid;
}

// ---------------------------------------------------------------------------

int cmd_construct_write(const noisyrec::ExperimentBundle& bundle,
                        const std::string& out) {
  std::ostringstream buffer;
  noisyrec::write_experiment_json(buffer, bundle);
  write_output(out, buffer.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_eval(const std::string& in_path, const std::string& tie_break,
             double sym_tol, const std::string& out) {
  using nlohmann::json;
  const noisyrec::ExperimentBundle bundle =
      noisyrec::read_experiment_json_file(in_path);
  const noisyrec::TieBreak tb = parse_tie_break(tie_break);
  const auto& exp = bundle.experiment;
  const auto& prior = bundle.prior;

  json j;
  j["alpha"] = prior.alpha();
  j["tie_break"] = noisyrec::to_string(tb);
  j["signals"] = exp.space().labels();

  json posteriors = json::array();
  json probabilities = json::array();
  json assignment = json::array();
  const noisyrec::AllocationRule rule = noisyrec::allocate(exp, prior, tb);
  for (std::size_t s = 0; s < exp.size(); ++s) {
    const double p = noisyrec::signal_probability(exp, prior, s);
    probabilities.push_back(p);
    if (p == 0.0) {
      posteriors.push_back(nullptr);  // zero-probability signal
    } else {
      posteriors.push_back(noisyrec::posterior(exp, prior, s));
    }
    assignment.push_back(noisyrec::to_string(rule.assignment[s]));
  }
  j["signal_probabilities"] = probabilities;
  j["posteriors"] = posteriors;
  j["allocation"] = assignment;
  j["minority_share"] = noisyrec::minority_share(exp, prior, tb);
  const noisyrec::GroupUtilities gu = noisyrec::group_utilities(exp, prior, tb);
  j["u_min"] = gu.u_min;
  j["u_maj"] = gu.u_maj;
  j["lower_bound_ok"] = noisyrec::lower_bound_check(gu, prior);
  if (bundle.involution) {
    j["symmetric"] =
        noisyrec::is_symmetric(exp, *bundle.involution, sym_tol);
    j["symmetry_tol"] = sym_tol;
  } else {
    j["symmetric"] = nullptr;
  }
  write_output(out, j.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_sweep(double alpha, const std::vector<double>& grid, bool mc_check,
              std::uint64_t n_samples, std::uint64_t seed,
              const std::string& out) {
  const noisyrec::Prior prior(alpha);
  const std::vector<noisyrec::SweepRow> rows = noisyrec::sweep(prior, grid);
  std::ostringstream buffer;
  if (mc_check) {
    std::vector<noisyrec::SimReport> mc;
    mc.reserve(rows.size());
    for (const noisyrec::SweepRow& row : rows) {
      mc.push_back(noisyrec::simulate_gaussian(
          noisyrec::GaussianModel(prior, row.kappa),
          noisyrec::TieBreak::FavorMinority, n_samples, seed));
    }
    noisyrec::write_sweep_csv(buffer, rows, mc);
  } else {
    noisyrec::write_sweep_csv(buffer, rows);
  }
  write_output(out, buffer.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_region(double alpha, bool symmetric, std::size_t cloud,
               std::size_t max_signals, std::uint64_t seed,
               const std::string& vertices_path, const std::string& cloud_path) {
  const noisyrec::Prior prior(alpha);
  const noisyrec::UtilityTriangle tri =
      symmetric ? noisyrec::symmetric_utility_triangle(prior)
                : noisyrec::general_utility_triangle(prior);
  {
    std::ostringstream buffer;
    noisyrec::write_vertices_csv(buffer, tri);
    write_output(vertices_path, buffer.str());
  }
  if (cloud > 0) {
    const auto points =
        noisyrec::empirical_cloud(prior, cloud, max_signals, symmetric, seed);
    std::ostringstream buffer;
    noisyrec::write_cloud_csv(buffer, points);
    write_output(cloud_path, buffer.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

// Checks one experiment file: symmetry under its involution, then the
// per-pair and aggregate share-bound report.
int cmd_verify_experiment(const std::string& in_path, double sym_tol) {
  const noisyrec::ExperimentBundle bundle =
      noisyrec::read_experiment_json_file(in_path);
  if (!bundle.involution) {
    throw noisyrec::Error(
        "experiment file carries no involution to verify against");
  }
  const auto& exp = bundle.experiment;
  const bool symmetric =
      noisyrec::is_symmetric(exp, *bundle.involution, sym_tol);
  std::cout << (symmetric ? "[PASS] " : "[FAIL] ")
            << "symmetry - lik_min(s) vs lik_maj(l(s)) within " << sym_tol
            << '\n';
  if (!symmetric) {
    for (std::size_t s = 0; s < exp.size(); ++s) {
      const double dev = std::abs(
          exp.lik_min()[s] - exp.lik_maj()[(*bundle.involution)(s)]);
      if (dev > sym_tol) {
        std::cout << "       failed: signal '" << exp.space().label(s)
                  << "' deviates by " << noisyrec::format_double(dev) << '\n';
      }
    }
    return kExitVerifyFailed;
  }
  const noisyrec::PairwiseShareReport report =
      noisyrec::verify_pairwise_share_bound(exp, bundle.prior,
                                            *bundle.involution);
  std::cout << (report.partners_ok ? "[PASS] " : "[FAIL] ")
            << "pair partners - no pair is served minority content twice\n";
  std::cout << (report.pairs_ok ? "[PASS] " : "[FAIL] ")
            << "pairwise inequality - P[s] <= (alpha/(1-alpha))P[l(s)] on "
               "served signals\n";
  for (const noisyrec::PairwiseShareCheck& c : report.checks) {
    if (!c.pair_bound_ok) {
      std::cout << "       failed: signal '" << exp.space().label(c.signal)
                << "': P[s] = " << noisyrec::format_double(c.p_signal)
                << " > bound " << noisyrec::format_double(c.pair_bound)
                << " via partner '" << exp.space().label(c.partner) << "'\n";
    }
  }
  std::cout << (report.aggregate_ok ? "[PASS] " : "[FAIL] ")
            << "aggregate share - share "
            << noisyrec::format_double(report.share) << " vs alpha "
            << noisyrec::format_double(report.alpha) << '\n';
  return report.all_ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const std::vector<std::string>& only, std::uint64_t seed,
               std::size_t restarts, std::size_t cloud,
               std::uint64_t n_samples, const std::string& json_path) {
  namespace verification = noisyrec::verification;
  verification::VerifyOptions options;
  options.seed = seed;
  options.symmetric_runs_per_alpha = restarts;
  options.cloud_points = cloud;
  options.mc_samples = n_samples;

  std::vector<std::string> ids = only;
  if (ids.empty()) ids = verification::criterion_ids();
  const auto& known = verification::criterion_ids();
  for (const std::string& id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw CLI::ValidationError("--only: unknown criterion '" + id + "'");
    }
  }

  bool all_passed = true;
  nlohmann::json report;
  report["criteria"] = nlohmann::json::array();
  for (const std::string& id : ids) {
    const verification::CriterionResult result =
        verification::run_criterion(id, options);
    verification::print_criterion(std::cout, result);
    all_passed = all_passed && result.passed;

    nlohmann::json jc;
    jc["id"] = result.id;
    jc["title"] = result.title;
    jc["passed"] = result.passed;
    jc["checks"] = nlohmann::json::array();
    for (const verification::CheckLine& line : result.checks) {
      jc["checks"].push_back({{"label", line.label},
                              {"passed", line.passed},
                              {"detail", line.detail}});
    }
    report["criteria"].push_back(std::move(jc));
  }
  report["all_passed"] = all_passed;
  if (!json_path.empty()) {
    write_output(json_path, report.dump(2) + "\n");
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "welfare-optimal recommendation under noisy binary-type measurement: "
      "experiment construction, allocation metrics, Gaussian closed forms, "
      "achievable-utility regions, and a numerical verification suite"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const noisyrec::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  }

  // construct ---------------------------------------------------------------
  auto* construct = app.add_subcommand(
      "construct", "emit a named experiment as schema JSON");
  double c_alpha = 0.25;
  std::string c_out;
  construct->add_option("--alpha", c_alpha, "minority incidence in (0, 1/2)")
      ->required();
  construct->add_option("--out,-o", c_out, "output path (default stdout)");
  construct->require_subcommand(1);

  auto* c_uninformative = construct->add_subcommand(
      "uninformative", "single-signal identical rows; share 0");
  auto* c_perfect =
      construct->add_subcommand("perfect", "two-signal full revelation");
  auto* c_vertex = construct->add_subcommand(
      "symmetric-vertex",
      "three-signal symmetric experiment attaining share alpha");
  auto* c_extremal = construct->add_subcommand(
      "extremal", "two-signal experiment with share p, p in [0, 2*alpha]");
  double c_p = 0.0;
  c_extremal->add_option("--p", c_p, "target minority share")->required();
  // Let construct's own flags appear after the construction name.
  for (auto* sub : {c_uninformative, c_perfect, c_vertex, c_extremal}) {
    sub->fallthrough();
  }

  // eval ---------------------------------------------------------------------
  auto* eval =
      app.add_subcommand("eval", "evaluate an experiment JSON file");
  std::string e_in, e_out, e_tb = "favor-minority";
  double e_sym_tol = noisyrec::kSymmetryTol;
  eval->add_option("--in,-i", e_in, "experiment JSON path")->required();
  eval->add_option("--tie-break", e_tb,
                   "favor-minority (default) or favor-majority");
  eval->add_option("--sym-tol", e_sym_tol,
                   "per-entry tolerance for the symmetry verdict");
  eval->add_option("--out,-o", e_out, "output path (default stdout)");

  // sweep ---------------------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "Gaussian closed forms over a kappa grid as CSV");
  double s_alpha = 0.25;
  std::vector<double> s_kappas;
  std::string s_grid, s_out;
  bool s_mc = false;
  std::uint64_t s_samples = 1000000;
  sweep->add_option("--alpha", s_alpha, "minority incidence")->required();
  sweep->add_option("--kappas", s_kappas,
                    "explicit kappa values (comma separated or repeated)")
      ->delimiter(',');
  sweep->add_option("--kappa-grid", s_grid, "start:step:stop");
  sweep->add_flag("--mc-check", s_mc,
                  "append Monte Carlo estimate and SE columns");
  sweep->add_option("--n-samples", s_samples, "samples per Monte Carlo check");
  sweep->add_option("--seed", seed, "rng seed (env NOISYREC_SEED, then 42)");
  sweep->add_option("--out,-o", s_out, "output path (default stdout)");

  // region ---------------------------------------------------------------------
  auto* region = app.add_subcommand(
      "region", "achievable-utility triangle vertices and empirical cloud");
  double r_alpha = 0.25;
  bool r_symmetric = false;
  std::size_t r_cloud = 0, r_max_signals = 10;
  std::string r_vertices = "vertices.csv", r_cloud_path = "cloud.csv";
  region->add_option("--alpha", r_alpha, "minority incidence")->required();
  region->add_flag("--symmetric", r_symmetric,
                   "use the symmetric-experiment triangle and cloud");
  region->add_option("--cloud", r_cloud,
                     "emit a cloud of this many random experiments");
  region->add_option("--max-signals", r_max_signals,
                     "largest signal count for cloud experiments");
  region->add_option("--seed", seed, "rng seed (env NOISYREC_SEED, then 42)");
  region->add_option("--vertices-out", r_vertices, "vertices CSV path");
  region->add_option("--cloud-out", r_cloud_path, "cloud CSV path");

  // verify ---------------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "run the verification suite; exit 3 if any criterion fails");
  std::vector<std::string> v_only;
  std::size_t v_restarts = 1000, v_cloud = 10000;
  std::uint64_t v_samples = 1000000;
  std::string v_json, v_in;
  double v_sym_tol = noisyrec::kSymmetryTol;
  verify->add_option("--in,-i", v_in,
                     "verify one experiment file (symmetry and share-bound "
                     "report) instead of the criteria");
  verify->add_option("--sym-tol", v_sym_tol,
                     "per-entry symmetry tolerance for --in");
  std::ostringstream only_help;
  only_help << "run only the named criteria; known:";
  for (const std::string& id : noisyrec::verification::criterion_ids()) {
    only_help << ' ' << id;
  }
  verify->add_option("--only", v_only, only_help.str())->delimiter(',');
  verify->add_option("--restarts", v_restarts,
                     "random symmetric experiments per alpha");
  verify->add_option("--cloud", v_cloud, "cloud points per triangle check");
  verify->add_option("--n-samples", v_samples,
                     "samples for the simulation oracle");
  verify->add_option("--seed", seed, "rng seed (env NOISYREC_SEED, then 42)");
  verify->add_option("--json", v_json, "write a machine-readable report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsageError;
  }

  try {
    if (construct->parsed()) {
      const noisyrec::Prior prior(c_alpha);
      noisyrec::Experiment exp = noisyrec::uninformative(prior);
      std::optional<noisyrec::Involution> involution;
      if (c_uninformative->parsed()) {
        exp = noisyrec::uninformative(prior);
      } else if (c_perfect->parsed()) {
        exp = noisyrec::perfect(prior);
      } else if (c_vertex->parsed()) {
        noisyrec::SymmetricExperiment se =
            noisyrec::symmetric_vertex_experiment(prior);
        exp = std::move(se.experiment);
        involution = std::move(se.involution);
      } else if (c_extremal->parsed()) {
        exp = noisyrec::extremal_share_experiment(prior, c_p);
      }
      return cmd_construct_write(
          noisyrec::ExperimentBundle{prior, std::move(exp),
                                     std::move(involution)},
          c_out);
    }
    if (eval->parsed()) {
      return cmd_eval(e_in, e_tb, e_sym_tol, e_out);
    }
    if (sweep->parsed()) {
      return cmd_sweep(s_alpha, parse_kappa_flags(s_kappas, s_grid), s_mc,
                       s_samples, seed, s_out);
    }
    if (region->parsed()) {
      return cmd_region(r_alpha, r_symmetric, r_cloud, r_max_signals, seed,
                        r_vertices, r_cloud_path);
    }
    if (verify->parsed()) {
      if (!v_in.empty()) {
        return cmd_verify_experiment(v_in, v_sym_tol);
      }
      return cmd_verify(v_only, seed, v_restarts, v_cloud, v_samples, v_json);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const noisyrec::EmptyGrid& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const noisyrec::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}
