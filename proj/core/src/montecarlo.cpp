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

#include "noisyrec/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "noisyrec/rng.hpp"

namespace noisyrec {

namespace {

constexpr std::uint64_t kBatchSize = 1 << 16;

// Stream for batch b of a run; keeps merged totals independent of batch
// order and lets batches run concurrently. The batch index goes through the
// output mix first: a plain multiple of the golden gamma would alias the
// generator's own stride and make batches replay each other's sequences.
Rng batch_stream(std::uint64_t seed, std::uint64_t batch) {
  Rng mixer(seed + batch);
  return Rng(mixer.next_u64());
}

struct Tally {
  std::uint64_t n_min = 0;        // minority-type samples
  std::uint64_t n_maj = 0;        // majority-type samples
  std::uint64_t served_any = 0;   // samples allocated minority content
  std::uint64_t served_min = 0;   // minority-type samples served x_min
  std::uint64_t served_maj = 0;   // majority-type samples served x_maj

  void merge(const Tally& other) {
    n_min += other.n_min;
    n_maj += other.n_maj;
    served_any += other.served_any;
    served_min += other.served_min;
    served_maj += other.served_maj;
  }
};

double binomial_se(double p_hat, std::uint64_t n) {
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n));
}

SimReport finish(const Tally& tally, std::uint64_t n_samples,
                 std::uint64_t seed) {
  SimReport report;
  report.n_samples = n_samples;
  report.seed = seed;
  report.n_minority = tally.n_min;
  report.n_majority = tally.n_maj;
  report.share_hat =
      static_cast<double>(tally.served_any) / static_cast<double>(n_samples);
  report.share_se = binomial_se(report.share_hat, n_samples);
  report.u_min_hat = tally.n_min == 0
                         ? 0.0
                         : static_cast<double>(tally.served_min) /
                               static_cast<double>(tally.n_min);
  report.u_min_se = binomial_se(report.u_min_hat, tally.n_min);
  report.u_maj_hat = tally.n_maj == 0
                         ? 0.0
                         : static_cast<double>(tally.served_maj) /
                               static_cast<double>(tally.n_maj);
  report.u_maj_se = binomial_se(report.u_maj_hat, tally.n_maj);
  return report;
}

template <typename SampleOnce>
SimReport run_batched(std::uint64_t n_samples, std::uint64_t seed,
                      SampleOnce&& sample_once) {
  if (n_samples == 0) {
    throw OutOfRange("n_samples must be at least 1");
  }
  Tally total;
  const std::uint64_t n_batches = (n_samples + kBatchSize - 1) / kBatchSize;
  for (std::uint64_t b = 0; b < n_batches; ++b) {
    Rng rng = batch_stream(seed, b);
    const std::uint64_t count =
        std::min<std::uint64_t>(kBatchSize, n_samples - b * kBatchSize);
    Tally tally;
    for (std::uint64_t i = 0; i < count; ++i) {
      sample_once(rng, tally);
    }
    total.merge(tally);
  }
  return finish(total, n_samples, seed);
}

}  // namespace

SimReport simulate_discrete(const Experiment& exp, const Prior& prior,
                            TieBreak tb, std::uint64_t n_samples,
                            std::uint64_t seed) {
  const AllocationRule rule = allocate(exp, prior, tb);
  // Per-type inverse-CDF tables.
  std::vector<double> cum_min(exp.size()), cum_maj(exp.size());
  double acc_min = 0.0, acc_maj = 0.0;
  for (std::size_t s = 0; s < exp.size(); ++s) {
    acc_min += exp.lik_min()[s];
    acc_maj += exp.lik_maj()[s];
    cum_min[s] = acc_min;
    cum_maj[s] = acc_maj;
  }

  const auto draw_signal = [&exp](const std::vector<double>& cum,
                                  std::span<const double> row, double u) {
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (idx >= exp.size()) idx = exp.size() - 1;  // roundoff at the far tail
    while (idx > 0 && row[idx] == 0.0) --idx;
    return idx;
  };

  return run_batched(n_samples, seed, [&](Rng& rng, auto& tally) {
    const bool is_minority = rng.next_double() < prior.alpha();
    const double u = rng.next_double();
    const std::size_t signal =
        is_minority ? draw_signal(cum_min, exp.lik_min(), u)
                    : draw_signal(cum_maj, exp.lik_maj(), u);
    const bool served_minority =
        rule.assignment[signal] == AgentType::Minority;
    if (is_minority) {
      ++tally.n_min;
      if (served_minority) ++tally.served_min;
    } else {
      ++tally.n_maj;
      if (!served_minority) ++tally.served_maj;
    }
    if (served_minority) ++tally.served_any;
  });
}

SimReport simulate_gaussian(const GaussianModel& m, TieBreak tb,
                            std::uint64_t n_samples, std::uint64_t seed) {
  const double x_star = decision_boundary(m);
  return run_batched(n_samples, seed, [&](Rng& rng, auto& tally) {
    const bool is_minority = rng.next_double() < m.prior.alpha();
    const double mean = is_minority ? 0.0 : 1.0;
    const double s = mean + m.kappa * rng.next_normal();
    const bool served_minority =
        tb == TieBreak::FavorMinority ? s <= x_star : s < x_star;
    if (is_minority) {
      ++tally.n_min;
      if (served_minority) ++tally.served_min;
    } else {
      ++tally.n_maj;
      if (!served_minority) ++tally.served_maj;
    }
    if (served_minority) ++tally.served_any;
  });
}

}  // namespace noisyrec
