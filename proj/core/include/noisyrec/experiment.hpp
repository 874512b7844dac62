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

#include <string_view>

#include "noisyrec/types.hpp"

namespace noisyrec {

/// P[minority | signal] by Bayes' rule:
/// alpha*lik_min(s) / (alpha*lik_min(s) + (1-alpha)*lik_maj(s)).
/// Throws ZeroLikelihoodSignal when both rows assign zero to the signal and
/// UnknownSignal for an index or label outside the space.
double posterior(const Experiment& exp, const Prior& prior, std::size_t signal);
double posterior(const Experiment& exp, const Prior& prior,
                 std::string_view label);

/// Unconditional signal probability alpha*lik_min(s) + (1-alpha)*lik_maj(s).
double signal_probability(const Experiment& exp, const Prior& prior,
                          std::size_t signal);
double signal_probability(const Experiment& exp, const Prior& prior,
                          std::string_view label);

/// Distribution over posterior beliefs induced by the experiment. Signals
/// with zero probability are dropped; duplicate belief values are kept, with
/// source_signals recording each retained signal index.
PosteriorDistribution induced_posterior_distribution(const Experiment& exp,
                                                     const Prior& prior);

/// True iff the distribution's mean belief equals the prior within
/// kBayesPlausibilityTol.
bool is_bayes_plausible(const PosteriorDistribution& pd, const Prior& prior);

}  // namespace noisyrec
