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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace noisyrec::verification {

/// Knobs for the verification suite. The defaults are the suite's contract;
/// raising the sizes tightens the evidence, lowering them speeds up smoke
/// runs.
struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t general_runs_per_alpha = 10000;   // extremal-attainment
  std::size_t symmetric_runs_per_alpha = 1000;  // symmetric-share-bound
  std::size_t cloud_points = 10000;             // utility-triangles
  std::uint64_t mc_samples = 1000000;           // gaussian-oracle
  std::size_t optimality_runs = 200;            // allocation-optimality
};

struct CheckLine {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::vector<CheckLine> checks;
};

/// Stable ids accepted by run_criterion and the CLI --only flag.
const std::vector<std::string>& criterion_ids();

/// Runs one criterion; throws OutOfRange for an unknown id.
CriterionResult run_criterion(std::string_view id,
                              const VerifyOptions& options = {});

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& options = {});

/// One PASS/FAIL line per criterion, followed by the detail line of every
/// failed check.
void print_criterion(std::ostream& out, const CriterionResult& result);

/// Slow long-double reference for the standard normal CDF: Maclaurin series
/// for the error function on |x| <= 4, Lentz continued fraction for the
/// complementary error function beyond. Independent of std_normal_cdf's
/// erfc-based path; absolute error well below 1e-15 on |x| <= 8.
double std_normal_cdf_oracle(double x);

}  // namespace noisyrec::verification
