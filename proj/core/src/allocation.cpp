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

#include "noisyrec/allocation.hpp"

#include "noisyrec/experiment.hpp"

namespace noisyrec {

const char* to_string(TieBreak tb) {
  return tb == TieBreak::FavorMinority ? "favor-minority" : "favor-majority";
}

AllocationRule allocate(const Experiment& exp, const Prior& prior,
                        TieBreak tb) {
  std::vector<AgentType> assignment(exp.size(), AgentType::Majority);
  for (std::size_t s = 0; s < exp.size(); ++s) {
    const double a = prior.alpha() * exp.lik_min()[s];
    const double b = prior.majority() * exp.lik_maj()[s];
    if (a == 0.0 && b == 0.0) continue;  // zero-probability signal
    const bool minority = tb == TieBreak::FavorMinority ? a >= b : a > b;
    if (minority) assignment[s] = AgentType::Minority;
  }
  return AllocationRule{std::move(assignment)};
}

double minority_share(const Experiment& exp, const Prior& prior, TieBreak tb) {
  const AllocationRule rule = allocate(exp, prior, tb);
  double share = 0.0;
  for (std::size_t s = 0; s < exp.size(); ++s) {
    if (rule.assignment[s] == AgentType::Minority) {
      share += signal_probability(exp, prior, s);
    }
  }
  return share;
}

GroupUtilities group_utilities(const Experiment& exp, const Prior& prior,
                               TieBreak tb) {
  const AllocationRule rule = allocate(exp, prior, tb);
  GroupUtilities gu;
  for (std::size_t s = 0; s < exp.size(); ++s) {
    if (rule.assignment[s] == AgentType::Minority) {
      gu.u_min += exp.lik_min()[s];
    } else {
      gu.u_maj += exp.lik_maj()[s];
    }
  }
  return gu;
}

bool lower_bound_check(const GroupUtilities& gu, const Prior& prior) {
  const double lhs =
      prior.alpha() / prior.majority() * gu.u_min + gu.u_maj;
  return lhs >= 1.0 - 1e-10;
}

double expected_welfare(const Experiment& exp, const Prior& prior,
                        const AllocationRule& rule) {
  if (rule.assignment.size() != exp.size()) {
    throw SizeMismatch("allocation rule covers " +
                       std::to_string(rule.assignment.size()) +
                       " signals, experiment has " + std::to_string(exp.size()));
  }
  double welfare = 0.0;
  for (std::size_t s = 0; s < exp.size(); ++s) {
    welfare += rule.assignment[s] == AgentType::Minority
                   ? prior.alpha() * exp.lik_min()[s]
                   : prior.majority() * exp.lik_maj()[s];
  }
  return welfare;
}

}  // namespace noisyrec
