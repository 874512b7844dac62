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

#include "noisyrec/allocation.hpp"
#include "noisyrec/gaussian.hpp"
#include "noisyrec/types.hpp"

namespace noisyrec {

/// Simulation estimates with binomial standard errors sqrt(p(1-p)/n). Group
/// utilities condition on realized type counts; a group with zero realized
/// samples reports estimate 0 and SE NaN (serialized as null).
struct SimReport {
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  double share_hat = 0.0;
  double share_se = 0.0;
  double u_min_hat = 0.0;
  double u_min_se = 0.0;
  double u_maj_hat = 0.0;
  double u_maj_se = 0.0;
  std::uint64_t n_minority = 0;
  std::uint64_t n_majority = 0;
};

/// Samples the generative timeline (type, then signal from the type's row,
/// then threshold allocation) for a finite experiment. Deterministic per
/// seed; accumulation is batched with per-batch derived streams and integer
/// totals, so merged results do not depend on batch order.
SimReport simulate_discrete(const Experiment& exp, const Prior& prior,
                            TieBreak tb, std::uint64_t n_samples,
                            std::uint64_t seed);

/// Same timeline for the Gaussian model: signal = mu_type + kappa*z with
/// polar-method normals, allocated by the decision boundary.
SimReport simulate_gaussian(const GaussianModel& m, TieBreak tb,
                            std::uint64_t n_samples, std::uint64_t seed);

}  // namespace noisyrec
