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

#include "noisyrec/types.hpp"

namespace noisyrec {

/// What the welfare-maximizing allocator does at posterior exactly 1/2, where
/// both contents give equal expected welfare. FavorMinority serves minority
/// content at ties and is the default.
enum class TieBreak { FavorMinority, FavorMajority };

const char* to_string(TieBreak tb);

/// Total assignment of content to signals. Indexed by signal position in the
/// experiment's space; zero-probability signals are assigned Majority.
struct AllocationRule {
  std::vector<AgentType> assignment;
};

/// Probability that each type receives its preferred content.
struct GroupUtilities {
  double u_min = 0.0;
  double u_maj = 0.0;
};

/// Welfare-maximizing threshold rule: a signal is assigned Minority iff
/// alpha*lik_min(s) >= (1-alpha)*lik_maj(s) (FavorMinority) or with strict
/// inequality (FavorMajority). Equivalent to comparing the posterior to 1/2.
AllocationRule allocate(const Experiment& exp, const Prior& prior,
                        TieBreak tb = TieBreak::FavorMinority);

/// P[minority content allocated] = sum of signal probabilities over the
/// minority-assigned signals. Satisfies the identity
/// share = alpha*u_min + (1-alpha)*(1-u_maj).
double minority_share(const Experiment& exp, const Prior& prior,
                      TieBreak tb = TieBreak::FavorMinority);

GroupUtilities group_utilities(const Experiment& exp, const Prior& prior,
                               TieBreak tb = TieBreak::FavorMinority);

/// Feasibility bound for utilities of optimal allocations:
/// (alpha/(1-alpha))*u_min + u_maj >= 1 (within 1e-10).
bool lower_bound_check(const GroupUtilities& gu, const Prior& prior);

/// Expected welfare alpha*P[served|min] + (1-alpha)*P[served|maj] of an
/// arbitrary deterministic assignment.
double expected_welfare(const Experiment& exp, const Prior& prior,
                        const AllocationRule& rule);

}  // namespace noisyrec
