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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "noisyrec/gaussian.hpp"
#include "noisyrec/montecarlo.hpp"
#include "noisyrec/region.hpp"
#include "noisyrec/symmetry.hpp"
#include "noisyrec/types.hpp"

namespace noisyrec {

/// On-disk experiment: prior, likelihood rows, optional involution.
/// JSON schema:
///   {"alpha": number, "signals": [string], "lik_min": [number],
///    "lik_maj": [number], "embedding": [[number]]?, "involution": [int]?}
struct ExperimentBundle {
  Prior prior;
  Experiment experiment;
  std::optional<Involution> involution;
};

ExperimentBundle read_experiment_json(std::istream& in);
ExperimentBundle read_experiment_json_file(const std::filesystem::path& path);
void write_experiment_json(std::ostream& out, const ExperimentBundle& bundle);
void write_experiment_json_file(const std::filesystem::path& path,
                                const ExperimentBundle& bundle);

/// SimReport as a JSON object; NaN standard errors become null.
std::string sim_report_json(const SimReport& report);

/// Shortest-exact decimal with 17 significant digits ("%.17g").
std::string format_double(double value);

/// CSV "kappa,x_star,share,u_min,u_maj", one row per grid point. The mc
/// overload appends Monte Carlo estimate and standard error columns.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows,
                     std::span<const SimReport> mc);

/// CSV "u_min,u_maj,constructor", one row per vertex.
void write_vertices_csv(std::ostream& out, const UtilityTriangle& tri);

/// CSV "u_min,u_maj", one row per cloud point.
void write_cloud_csv(std::ostream& out,
                     std::span<const std::array<double, 2>> points);

}  // namespace noisyrec
