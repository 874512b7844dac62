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

#include "noisyrec/symmetry.hpp"
#include "noisyrec/types.hpp"

namespace noisyrec {

/// Experiment with one signal per support point of a Bayes-plausible belief
/// distribution: lik_min(s_i) = m_i*x_i/alpha, lik_maj(s_i) =
/// m_i*(1-x_i)/(1-alpha). Round trip: induced_posterior_distribution returns
/// the input within 1e-10. Throws NotBayesPlausible when the mean belief is
/// not the prior.
Experiment posterior_to_experiment(const PosteriorDistribution& pd,
                                   const Prior& prior);

/// Two-signal experiment whose minority share under FavorMinority equals p:
/// belief mass p at 1/2 and 1-p at (alpha - p/2)/(1-p). Requires
/// 0 <= p <= 2*alpha (OutOfRange otherwise). Attainment needs FavorMinority
/// because the boundary signal's posterior is exactly 1/2.
Experiment extremal_share_experiment(const Prior& prior, double p);

/// Single-signal experiment with identical rows: no information, every
/// posterior equals the prior.
Experiment uninformative(const Prior& prior);

/// Two-signal full-revelation experiment: posterior 1 or 0.
Experiment perfect(const Prior& prior);

/// Three-signal symmetric experiment with rows
///   lik_min = (1/2, alpha/(2(1-alpha)), r),
///   lik_maj = (alpha/(2(1-alpha)), 1/2, r),  r = 1/2 - alpha/(2(1-alpha)),
/// and involution swapping the first two signals. Under FavorMinority it
/// attains minority share alpha and utilities (1/2, 1 - alpha/(2(1-alpha))).
SymmetricExperiment symmetric_vertex_experiment(const Prior& prior);

}  // namespace noisyrec
