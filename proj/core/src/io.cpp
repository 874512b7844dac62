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

#include "noisyrec/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

namespace noisyrec {

namespace {

using nlohmann::json;

json parse(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidExperiment(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw InvalidExperiment("experiment JSON must be an object");
  }
  return j;
}

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw InvalidExperiment(std::string("missing or non-array field: ") + key);
  }
  std::vector<double> out;
  out.reserve(j[key].size());
  for (const auto& v : j[key]) {
    if (!v.is_number()) {
      throw InvalidExperiment(std::string("non-numeric entry in ") + key);
    }
    out.push_back(v.get<double>());
  }
  return out;
}

json double_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

ExperimentBundle read_experiment_json(std::istream& in) {
  const json j = parse(in);
  if (!j.contains("alpha") || !j["alpha"].is_number()) {
    throw InvalidExperiment("missing or non-numeric field: alpha");
  }
  Prior prior(j["alpha"].get<double>());

  if (!j.contains("signals") || !j["signals"].is_array()) {
    throw InvalidExperiment("missing or non-array field: signals");
  }
  std::vector<std::string> labels;
  labels.reserve(j["signals"].size());
  for (const auto& v : j["signals"]) {
    if (!v.is_string()) {
      throw InvalidExperiment("non-string entry in signals");
    }
    labels.push_back(v.get<std::string>());
  }

  std::optional<std::vector<std::vector<double>>> embedding;
  if (j.contains("embedding") && !j["embedding"].is_null()) {
    if (!j["embedding"].is_array()) {
      throw InvalidExperiment("embedding must be an array of points");
    }
    std::vector<std::vector<double>> points;
    for (const auto& p : j["embedding"]) {
      if (!p.is_array()) {
        throw InvalidExperiment("embedding points must be arrays of numbers");
      }
      std::vector<double> coords;
      for (const auto& c : p) {
        if (!c.is_number()) {
          throw InvalidExperiment("embedding coordinates must be numbers");
        }
        coords.push_back(c.get<double>());
      }
      points.push_back(std::move(coords));
    }
    embedding = std::move(points);
  }

  Experiment experiment(SignalSpace(std::move(labels), std::move(embedding)),
                        number_array(j, "lik_min"), number_array(j, "lik_maj"));

  std::optional<Involution> involution;
  if (j.contains("involution") && !j["involution"].is_null()) {
    if (!j["involution"].is_array()) {
      throw InvalidExperiment("involution must be an array of indices");
    }
    std::vector<std::size_t> pairing;
    for (const auto& v : j["involution"]) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InvalidInvolution("involution entries must be non-negative ints");
      }
      pairing.push_back(v.get<std::size_t>());
    }
    if (pairing.size() != experiment.size()) {
      throw InvalidInvolution("involution length must match the signal count");
    }
    involution = Involution(std::move(pairing));
  }

  return ExperimentBundle{std::move(prior), std::move(experiment),
                          std::move(involution)};
}

ExperimentBundle read_experiment_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open experiment file: " + path.string());
  }
  return read_experiment_json(in);
}

void write_experiment_json(std::ostream& out, const ExperimentBundle& bundle) {
  json j;
  j["alpha"] = bundle.prior.alpha();
  j["signals"] = bundle.experiment.space().labels();
  j["lik_min"] = bundle.experiment.lik_min();
  j["lik_maj"] = bundle.experiment.lik_maj();
  if (bundle.experiment.space().embedding()) {
    j["embedding"] = *bundle.experiment.space().embedding();
  }
  if (bundle.involution) {
    j["involution"] = bundle.involution->pairing();
  }
  out << j.dump(2) << '\n';
}

void write_experiment_json_file(const std::filesystem::path& path,
                                const ExperimentBundle& bundle) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open output file: " + path.string());
  }
  write_experiment_json(out, bundle);
}

std::string sim_report_json(const SimReport& report) {
  json j;
  j["n_samples"] = report.n_samples;
  j["seed"] = report.seed;
  j["share_hat"] = report.share_hat;
  j["share_se"] = double_or_null(report.share_se);
  j["u_min_hat"] = report.u_min_hat;
  j["u_min_se"] = double_or_null(report.u_min_se);
  j["u_maj_hat"] = report.u_maj_hat;
  j["u_maj_se"] = double_or_null(report.u_maj_se);
  j["n_minority"] = report.n_minority;
  j["n_majority"] = report.n_majority;
  return j.dump(2);
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "kappa,x_star,share,u_min,u_maj\n";
  for (const SweepRow& row : rows) {
    out << format_double(row.kappa) << ',' << format_double(row.x_star) << ','
        << format_double(row.share) << ',' << format_double(row.u_min) << ','
        << format_double(row.u_maj) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows,
                     std::span<const SimReport> mc) {
  if (mc.size() != rows.size()) {
    throw SizeMismatch("one Monte Carlo report per sweep row required");
  }
  out << "kappa,x_star,share,u_min,u_maj,share_mc,share_mc_se,u_min_mc,"
         "u_min_mc_se,u_maj_mc,u_maj_mc_se\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& row = rows[i];
    const SimReport& r = mc[i];
    out << format_double(row.kappa) << ',' << format_double(row.x_star) << ','
        << format_double(row.share) << ',' << format_double(row.u_min) << ','
        << format_double(row.u_maj) << ',' << format_double(r.share_hat) << ','
        << format_double(r.share_se) << ',' << format_double(r.u_min_hat)
        << ',' << format_double(r.u_min_se) << ','
        << format_double(r.u_maj_hat) << ',' << format_double(r.u_maj_se)
        << '\n';
  }
}

void write_vertices_csv(std::ostream& out, const UtilityTriangle& tri) {
  out << "u_min,u_maj,constructor\n";
  for (std::size_t i = 0; i < 3; ++i) {
    out << format_double(tri.vertices[i][0]) << ','
        << format_double(tri.vertices[i][1]) << ',' << tri.constructors[i]
        << '\n';
  }
}

void write_cloud_csv(std::ostream& out,
                     std::span<const std::array<double, 2>> points) {
  out << "u_min,u_maj\n";
  for (const auto& p : points) {
    out << format_double(p[0]) << ',' << format_double(p[1]) << '\n';
  }
}

}  // namespace noisyrec
