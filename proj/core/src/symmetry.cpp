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

#include "noisyrec/symmetry.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "noisyrec/allocation.hpp"
#include "noisyrec/constructions.hpp"
#include "noisyrec/experiment.hpp"
#include "noisyrec/rng.hpp"

namespace noisyrec {

Involution::Involution(std::vector<std::size_t> pairing)
    : pairing_(std::move(pairing)) {
  for (std::size_t i = 0; i < pairing_.size(); ++i) {
    const std::size_t j = pairing_[i];
    if (j >= pairing_.size()) {
      throw InvalidInvolution("pairing entry " + std::to_string(j) +
                              " out of range");
    }
    if (pairing_[j] != i) {
      throw InvalidInvolution("pairing is not self-inverse at index " +
                              std::to_string(i));
    }
  }
}

Involution Involution::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return Involution(std::move(p));
}

std::size_t Involution::operator()(std::size_t i) const {
  if (i >= pairing_.size()) {
    throw OutOfRange("involution index " + std::to_string(i) +
                     " out of range");
  }
  return pairing_[i];
}

std::vector<double> midplane_reflection(std::span<const double> mu_min,
                                        std::span<const double> mu_maj,
                                        std::span<const double> s) {
  if (mu_min.size() != mu_maj.size() || mu_min.size() != s.size() ||
      s.empty()) {
    throw SizeMismatch("midplane reflection requires points of one dimension");
  }
  double norm2 = 0.0;
  for (std::size_t d = 0; d < s.size(); ++d) {
    const double u = mu_maj[d] - mu_min[d];
    norm2 += u * u;
  }
  if (norm2 == 0.0) {
    throw DegenerateMeans("type means coincide; the midplane is undefined");
  }
  // Projection of (s - midpoint) on the mean axis; reflecting relative to the
  // midpoint keeps the plane equidistant from both means fixed.
  double t = 0.0;
  for (std::size_t d = 0; d < s.size(); ++d) {
    const double mid = 0.5 * (mu_min[d] + mu_maj[d]);
    t += (s[d] - mid) * (mu_maj[d] - mu_min[d]);
  }
  t /= norm2;
  std::vector<double> out(s.begin(), s.end());
  for (std::size_t d = 0; d < s.size(); ++d) {
    out[d] -= 2.0 * t * (mu_maj[d] - mu_min[d]);
  }
  return out;
}

double midplane_reflection(double mu_min, double mu_maj, double s) {
  const double a[1] = {mu_min}, b[1] = {mu_maj}, p[1] = {s};
  return midplane_reflection(std::span<const double>(a),
                             std::span<const double>(b),
                             std::span<const double>(p))[0];
}

Involution pair_signals_by_embedding(const SignalSpace& space,
                                     std::span<const double> mu_min,
                                     std::span<const double> mu_maj,
                                     double tol) {
  if (!space.embedding()) {
    throw InvalidExperiment("signal space carries no embedding to pair");
  }
  const auto& points = *space.embedding();
  std::vector<std::size_t> pairing(space.size());
  std::vector<std::string> offenders;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::vector<double> reflected =
        midplane_reflection(mu_min, mu_maj, points[i]);
    std::size_t match = points.size();
    std::size_t n_matches = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      double d2 = 0.0;
      for (std::size_t d = 0; d < reflected.size(); ++d) {
        const double diff = points[j][d] - reflected[d];
        d2 += diff * diff;
      }
      if (std::sqrt(d2) <= tol) {
        match = j;
        ++n_matches;
      }
    }
    if (n_matches != 1) {
      offenders.push_back(space.label(i));
      continue;
    }
    pairing[i] = match;
  }
  if (!offenders.empty()) {
    std::ostringstream msg;
    msg << "signals without a unique reflected partner:";
    for (const auto& label : offenders) msg << ' ' << label;
    throw UnpairedSignal(msg.str());
  }
  return Involution(std::move(pairing));
}

bool is_symmetric(const Experiment& exp, const Involution& inv, double tol) {
  if (inv.size() != exp.size()) {
    throw SizeMismatch("involution covers " + std::to_string(inv.size()) +
                       " signals, experiment has " + std::to_string(exp.size()));
  }
  for (std::size_t s = 0; s < exp.size(); ++s) {
    if (std::abs(exp.lik_min()[s] - exp.lik_maj()[inv(s)]) > tol) return false;
  }
  return true;
}

PairwiseShareReport verify_pairwise_share_bound(const Experiment& exp,
                                                const Prior& prior,
                                                const Involution& inv) {
  if (!is_symmetric(exp, inv)) {
    throw NotSymmetric(
        "pairwise share-bound checks require a symmetric experiment");
  }
  constexpr double kSlack = 1e-12;
  const AllocationRule rule = allocate(exp, prior, TieBreak::FavorMinority);
  PairwiseShareReport report;
  report.alpha = prior.alpha();
  const double odds = prior.alpha() / prior.majority();
  for (std::size_t s = 0; s < exp.size(); ++s) {
    if (rule.assignment[s] != AgentType::Minority) continue;
    PairwiseShareCheck check;
    check.signal = s;
    check.partner = inv(s);
    check.p_signal = signal_probability(exp, prior, s);
    check.p_partner = signal_probability(exp, prior, check.partner);
    check.pair_bound = odds * check.p_partner;
    check.partner_in_majority =
        rule.assignment[check.partner] == AgentType::Majority;
    check.pair_bound_ok = check.p_signal <= check.pair_bound + kSlack;
    report.partners_ok = report.partners_ok && check.partner_in_majority;
    report.pairs_ok = report.pairs_ok && check.pair_bound_ok;
    report.share += check.p_signal;
    report.checks.push_back(check);
  }
  report.aggregate_ok = report.share <= prior.alpha() + kSlack;
  return report;
}

SymmetricExperiment random_symmetric_experiment(const Prior& prior,
                                                std::size_t n_pairs,
                                                std::size_t n_fixed,
                                                std::uint64_t seed) {
  (void)prior;  // the construction is prior-free; kept for interface symmetry
  const std::size_t n = 2 * n_pairs + n_fixed;
  if (n == 0) {
    throw OutOfRange("need at least one signal (n_pairs + n_fixed >= 1)");
  }
  std::vector<std::size_t> pairing(n);
  std::iota(pairing.begin(), pairing.end(), std::size_t{0});
  for (std::size_t i = 0; i < n_pairs; ++i) {
    pairing[2 * i] = 2 * i + 1;
    pairing[2 * i + 1] = 2 * i;
  }
  Involution inv(std::move(pairing));

  Rng rng(seed);
  std::vector<double> lik_min = sample_simplex(n, rng);
  std::vector<double> lik_maj(n);
  for (std::size_t s = 0; s < n; ++s) lik_maj[s] = lik_min[inv(s)];
  Experiment exp(SignalSpace::indexed(n), std::move(lik_min),
                 std::move(lik_maj));
  return SymmetricExperiment{std::move(exp), std::move(inv)};
}

double max_share_symmetric_search(const Prior& prior, std::size_t n_pairs,
                                  std::size_t n_fixed, std::size_t n_restarts,
                                  std::uint64_t seed) {
  double best = minority_share(symmetric_vertex_experiment(prior).experiment,
                               prior, TieBreak::FavorMinority);
  for (std::size_t r = 0; r < n_restarts; ++r) {
    const SymmetricExperiment se =
        random_symmetric_experiment(prior, n_pairs, n_fixed, seed + r);
    best = std::max(
        best, minority_share(se.experiment, prior, TieBreak::FavorMinority));
  }
  return best;
}

}  // namespace noisyrec
