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

#include "noisyrec/constructions.hpp"

#include <cmath>
#include <sstream>

#include "noisyrec/experiment.hpp"

namespace noisyrec {

namespace {

// Signals engineered to sit at posterior exactly 1/2 must survive the
// allocator's comparison alpha*lik_min >= (1-alpha)*lik_maj. A single rounding
// step in the row formulas can land the products one ulp apart in either
// direction; lowering the majority entry until the comparison holds (exactly
// equal when reachable) keeps real-arithmetic ties on the minority side.
double tie_majority_entry(double minority_product, double majority_factor,
                          double entry) {
  for (int i = 0; i < 8 && majority_factor * entry > minority_product; ++i) {
    entry = std::nextafter(entry, 0.0);
  }
  return entry;
}

}  // namespace

Experiment posterior_to_experiment(const PosteriorDistribution& pd,
                                   const Prior& prior) {
  if (!is_bayes_plausible(pd, prior)) {
    std::ostringstream msg;
    msg << "posterior distribution mean " << pd.mean()
        << " does not match the prior " << prior.alpha();
    throw NotBayesPlausible(msg.str());
  }
  const std::size_t n = pd.size();
  std::vector<double> lik_min(n), lik_maj(n);
  double sum_min = 0.0, sum_maj = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double joint_min = pd.masses()[i] * pd.support()[i];
    lik_min[i] = joint_min / prior.alpha();
    lik_maj[i] = (pd.masses()[i] - joint_min) / prior.majority();
    sum_min += lik_min[i];
    sum_maj += lik_maj[i];
  }
  // The mean may sit anywhere inside the Bayes-plausibility tolerance, which
  // is wider than the row-sum tolerance; renormalizing keeps the rows valid
  // (a no-op when the sums are exactly one).
  for (std::size_t i = 0; i < n; ++i) {
    lik_min[i] /= sum_min;
    lik_maj[i] /= sum_maj;
  }
  return Experiment(SignalSpace::indexed(n), std::move(lik_min),
                    std::move(lik_maj));
}

Experiment extremal_share_experiment(const Prior& prior, double p) {
  const double alpha = prior.alpha();
  if (!std::isfinite(p) || p < 0.0) {
    std::ostringstream msg;
    msg << "share p = " << p << " is negative";
    throw OutOfRange(msg.str());
  }
  if (p > 2.0 * alpha) {
    std::ostringstream msg;
    msg << "share p = " << p << " exceeds 2*alpha = " << 2.0 * alpha;
    throw OutOfRange(msg.str());
  }
  // Belief mass p at 1/2 and 1-p at (alpha - p/2)/(1-p).
  const double boundary_mass = 0.5 * p;
  const double residual = (alpha - boundary_mass) / (1.0 - p);
  std::vector<double> lik_min = {boundary_mass / alpha,
                                 (1.0 - p) * residual / alpha};
  std::vector<double> lik_maj = {boundary_mass / prior.majority(),
                                 (1.0 - p) * (1.0 - residual) / prior.majority()};
  lik_maj[0] = tie_majority_entry(alpha * lik_min[0], prior.majority(),
                                  lik_maj[0]);
  return Experiment(SignalSpace::indexed(2), std::move(lik_min),
                    std::move(lik_maj));
}

Experiment uninformative(const Prior& prior) {
  (void)prior;
  return Experiment(SignalSpace::indexed(1), {1.0}, {1.0});
}

Experiment perfect(const Prior& prior) {
  (void)prior;
  return Experiment(SignalSpace::indexed(2), {1.0, 0.0}, {0.0, 1.0});
}

SymmetricExperiment symmetric_vertex_experiment(const Prior& prior) {
  const double alpha = prior.alpha();
  double cross = alpha / (2.0 * prior.majority());
  cross = tie_majority_entry(alpha * 0.5, prior.majority(), cross);
  const double rest = 0.5 - cross;
  Experiment exp(SignalSpace({"s", "l(s)", "s~"}), {0.5, cross, rest},
                 {cross, 0.5, rest});
  return SymmetricExperiment{std::move(exp), Involution({1, 0, 2})};
}

}  // namespace noisyrec
