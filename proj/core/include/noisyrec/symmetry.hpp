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

#include "noisyrec/types.hpp"

namespace noisyrec {

/// Self-inverse pairing of signal indices: pairing[pairing[i]] == i, fixed
/// points allowed.
class Involution {
 public:
  explicit Involution(std::vector<std::size_t> pairing);

  static Involution identity(std::size_t n);

  std::size_t size() const { return pairing_.size(); }
  std::size_t operator()(std::size_t i) const;
  std::span<const std::size_t> pairing() const { return pairing_; }

 private:
  std::vector<std::size_t> pairing_;
};

/// Reflection of point s across the hyperplane equidistant from the two type
/// means (the perpendicular bisector of the segment [mu_min, mu_maj]).
/// Applying it twice returns s; the midpoint is fixed; distances to the two
/// means swap. Throws DegenerateMeans when the means coincide and
/// SizeMismatch on dimension disagreement.
std::vector<double> midplane_reflection(std::span<const double> mu_min,
                                        std::span<const double> mu_maj,
                                        std::span<const double> s);
double midplane_reflection(double mu_min, double mu_maj, double s);

/// Discrete pairing induced by the midplane reflection on an embedded signal
/// space: each signal's reflected point must match exactly one signal within
/// tol (Euclidean distance). Throws UnpairedSignal naming the offenders.
Involution pair_signals_by_embedding(const SignalSpace& space,
                                     std::span<const double> mu_min,
                                     std::span<const double> mu_maj,
                                     double tol);

/// Symmetry of measurement error with respect to an involution l:
/// lik_min(s) == lik_maj(l(s)) for every signal, within tol per entry. The
/// mirrored condition follows by the involution property.
bool is_symmetric(const Experiment& exp, const Involution& inv,
                  double tol = kSymmetryTol);

/// Per-signal record for one minority-served signal s and its partner l(s).
struct PairwiseShareCheck {
  std::size_t signal = 0;
  std::size_t partner = 0;
  double p_signal = 0.0;   // P[s]
  double p_partner = 0.0;  // P[l(s)]
  double pair_bound = 0.0; // (alpha/(1-alpha)) * P[l(s)]
  bool partner_in_majority = false;  // l(s) not served minority content
  bool pair_bound_ok = false;        // P[s] <= pair_bound + 1e-12
};

/// Report for the conjectured symmetric-experiment share bound: for every
/// minority-served signal (FavorMinority threshold), whether the partner is
/// majority-served and whether P[s] <= (alpha/(1-alpha))*P[l(s)]; plus the
/// aggregate bound share <= alpha. The checks are reported, not asserted:
/// the pairwise inequality and the aggregate bound do not hold for all
/// symmetric experiments (see verify_pairwise_share_bound).
struct PairwiseShareReport {
  std::vector<PairwiseShareCheck> checks;
  double share = 0.0;
  double alpha = 0.0;
  bool partners_ok = true;   // every l(s) is majority-served
  bool pairs_ok = true;      // every pairwise inequality holds
  bool aggregate_ok = true;  // share <= alpha + 1e-12

  bool all_ok() const { return partners_ok && pairs_ok && aggregate_ok; }
};

/// Evaluates the pairwise and aggregate share-bound checks on a symmetric
/// experiment. Requires is_symmetric (throws NotSymmetric otherwise).
///
/// The partner check always passes: a pair (s, l(s)) cannot both be served
/// minority content. The pairwise inequality is reported for diagnosis but is
/// reversed in reality: for a symmetric pair,
///   P[s] - (alpha/(1-alpha))*P[l(s)] = lik_maj(s)*(1-2*alpha)/(1-alpha) >= 0,
/// so it can only hold with equality when lik_maj(s) = 0, and the aggregate
/// bound share <= alpha fails for informative symmetric experiments (the
/// attainable supremum is 2*alpha*(1-alpha); a binary symmetric channel with
/// crossover just below alpha approaches it).
PairwiseShareReport verify_pairwise_share_bound(const Experiment& exp,
                                                const Prior& prior,
                                                const Involution& inv);

/// An experiment bundled with the involution that certifies its symmetry.
struct SymmetricExperiment {
  Experiment experiment;
  Involution involution;
};

/// Seeded generator: draws lik_min from the flat simplex on
/// 2*n_pairs + n_fixed signals and mirrors lik_maj through the pairing, so
/// the output is symmetric by construction (fixed signals get equal values in
/// both rows). Pairs occupy adjacent indices (2i, 2i+1); fixed signals follow.
SymmetricExperiment random_symmetric_experiment(const Prior& prior,
                                                std::size_t n_pairs,
                                                std::size_t n_fixed,
                                                std::uint64_t seed);

/// Maximum minority share (FavorMinority) found over n_restarts random
/// symmetric experiments plus the symmetric-vertex candidate. Restart r uses
/// the derived seed seed + r. Returns the maximum found; with enough restarts
/// this exceeds alpha and approaches 2*alpha*(1-alpha).
double max_share_symmetric_search(const Prior& prior, std::size_t n_pairs,
                                  std::size_t n_fixed, std::size_t n_restarts,
                                  std::uint64_t seed);

}  // namespace noisyrec
