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

#include "noisyrec/symmetry.hpp"
#include "noisyrec/types.hpp"

namespace noisyrec {

/// 1-D equal-variance Gaussian measurement: signal ~ N(mu_type, kappa^2) with
/// means normalized to mu_min = 0, mu_maj = 1.
struct GaussianModel {
  GaussianModel(Prior prior_, double kappa_);

  Prior prior;
  double kappa;
};

/// Standard normal CDF via the C library's erfc; max error a few ulp on
/// |x| <= 8, result clamped to [0, 1].
double std_normal_cdf(double x);

/// Standard normal density.
double std_normal_pdf(double x);

/// Posterior-odds-one threshold x* = 1/2 + kappa^2 * ln(alpha/(1-alpha)).
/// Signals at or below x* favor the minority; x* < 1/2 always.
double decision_boundary(const GaussianModel& m);

/// P[minority content] = alpha*Phi(x*/kappa) + (1-alpha)*Phi((x*-1)/kappa).
/// Decreases from alpha (kappa -> 0) to 0 (kappa -> inf) and never exceeds
/// alpha.
double minority_share(const GaussianModel& m);

/// u_min = Phi(x*/kappa): probability a minority consumer is served minority
/// content.
double minority_utility(const GaussianModel& m);

/// u_maj = Phi((1-x*)/kappa).
double majority_utility(const GaussianModel& m);

/// d(minority_share)/d(kappa), analytic.
double share_derivative(const GaussianModel& m);

/// d(u_min)/d(kappa), analytic; non-positive for every kappa > 0 since the
/// argument derivative -1/(2 kappa^2) + ln(alpha/(1-alpha)) is negative.
double utility_derivative(const GaussianModel& m);

struct SweepRow {
  double kappa = 0.0;
  double x_star = 0.0;
  double share = 0.0;
  double u_min = 0.0;
  double u_maj = 0.0;
};

/// Evaluates the closed forms over an ascending positive kappa grid.
/// Throws EmptyGrid on an empty grid and OutOfRange on an unsorted or
/// non-positive one.
std::vector<SweepRow> sweep(const Prior& prior,
                            std::span<const double> kappa_grid);

/// Finite experiment over n_bins bins: n_bins - 2 equal-width bins spanning
/// [1/2 - half_width, 1/2 + half_width] plus two unbounded tails (n_bins == 2
/// gives the two half-lines split at 1/2). Bin masses are Phi differences per
/// type; the involution reflects bins about 1/2. The output is symmetric and
/// its discrete minority share converges to the closed form as n_bins grows.
SymmetricExperiment discretize(const GaussianModel& m, std::size_t n_bins,
                               double half_width);

}  // namespace noisyrec
