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

#include "noisyrec/experiment.hpp"

#include <cmath>
#include <string>

namespace noisyrec {

namespace {

void check_signal(const Experiment& exp, std::size_t signal) {
  if (signal >= exp.size()) {
    throw UnknownSignal("signal index " + std::to_string(signal) +
                        " out of range for experiment with " +
                        std::to_string(exp.size()) + " signals");
  }
}

}  // namespace

double posterior(const Experiment& exp, const Prior& prior,
                 std::size_t signal) {
  check_signal(exp, signal);
  const double a = prior.alpha() * exp.lik_min()[signal];
  const double b = prior.majority() * exp.lik_maj()[signal];
  if (a + b == 0.0) {
    throw ZeroLikelihoodSignal("posterior undefined at signal '" +
                               exp.space().label(signal) +
                               "': both likelihoods are zero");
  }
  return a / (a + b);
}

double posterior(const Experiment& exp, const Prior& prior,
                 std::string_view label) {
  return posterior(exp, prior, exp.space().index_of(label));
}

double signal_probability(const Experiment& exp, const Prior& prior,
                          std::size_t signal) {
  check_signal(exp, signal);
  return prior.alpha() * exp.lik_min()[signal] +
         prior.majority() * exp.lik_maj()[signal];
}

double signal_probability(const Experiment& exp, const Prior& prior,
                          std::string_view label) {
  return signal_probability(exp, prior, exp.space().index_of(label));
}

PosteriorDistribution induced_posterior_distribution(const Experiment& exp,
                                                     const Prior& prior) {
  std::vector<double> support;
  std::vector<double> masses;
  std::vector<std::size_t> sources;
  for (std::size_t s = 0; s < exp.size(); ++s) {
    const double p = signal_probability(exp, prior, s);
    if (p == 0.0) continue;  // never realized; keeps pairings intact upstream
    support.push_back(posterior(exp, prior, s));
    masses.push_back(p);
    sources.push_back(s);
  }
  return PosteriorDistribution(std::move(support), std::move(masses),
                               std::move(sources));
}

bool is_bayes_plausible(const PosteriorDistribution& pd, const Prior& prior) {
  return std::abs(pd.mean() - prior.alpha()) <= kBayesPlausibilityTol;
}

}  // namespace noisyrec
