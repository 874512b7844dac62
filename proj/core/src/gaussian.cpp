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

#include "noisyrec/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace noisyrec {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

double log_odds(const Prior& prior) {
  return std::log(prior.alpha() / prior.majority());
}

}  // namespace

GaussianModel::GaussianModel(Prior prior_, double kappa_)
    : prior(prior_), kappa(kappa_) {
  if (!std::isfinite(kappa) || kappa <= 0.0) {
    std::ostringstream msg;
    msg << "kappa must be a positive real, got " << kappa;
    throw OutOfRange(msg.str());
  }
}

double std_normal_cdf(double x) {
  return std::clamp(0.5 * std::erfc(-x * kInvSqrt2), 0.0, 1.0);
}

double std_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) * kInvSqrt2Pi;
}

double decision_boundary(const GaussianModel& m) {
  return 0.5 + m.kappa * m.kappa * log_odds(m.prior);
}

double minority_share(const GaussianModel& m) {
  const double x_star = decision_boundary(m);
  return m.prior.alpha() * std_normal_cdf(x_star / m.kappa) +
         m.prior.majority() * std_normal_cdf((x_star - 1.0) / m.kappa);
}

double minority_utility(const GaussianModel& m) {
  return std_normal_cdf(decision_boundary(m) / m.kappa);
}

double majority_utility(const GaussianModel& m) {
  return std_normal_cdf((1.0 - decision_boundary(m)) / m.kappa);
}

double share_derivative(const GaussianModel& m) {
  const double k = m.kappa;
  const double lo = log_odds(m.prior);
  const double a = 0.5 / k + k * lo;         // x*/kappa
  const double b = -0.5 / k + k * lo;        // (x*-1)/kappa
  const double da = -0.5 / (k * k) + lo;
  const double db = 0.5 / (k * k) + lo;
  return m.prior.alpha() * std_normal_pdf(a) * da +
         m.prior.majority() * std_normal_pdf(b) * db;
}

double utility_derivative(const GaussianModel& m) {
  const double k = m.kappa;
  const double lo = log_odds(m.prior);
  const double a = 0.5 / k + k * lo;
  return std_normal_pdf(a) * (-0.5 / (k * k) + lo);
}

std::vector<SweepRow> sweep(const Prior& prior,
                            std::span<const double> kappa_grid) {
  if (kappa_grid.empty()) {
    throw EmptyGrid("kappa grid is empty");
  }
  for (std::size_t i = 0; i < kappa_grid.size(); ++i) {
    if (!std::isfinite(kappa_grid[i]) || kappa_grid[i] <= 0.0) {
      throw OutOfRange("kappa grid entries must be positive reals");
    }
    if (i > 0 && kappa_grid[i] < kappa_grid[i - 1]) {
      throw OutOfRange("kappa grid must be sorted ascending");
    }
  }
  std::vector<SweepRow> rows;
  rows.reserve(kappa_grid.size());
  for (double kappa : kappa_grid) {
    const GaussianModel m(prior, kappa);
    rows.push_back(SweepRow{kappa, decision_boundary(m), minority_share(m),
                            minority_utility(m), majority_utility(m)});
  }
  return rows;
}

SymmetricExperiment discretize(const GaussianModel& m, std::size_t n_bins,
                               double half_width) {
  if (n_bins < 2) {
    throw InvalidBins("need at least the two tail bins, got " +
                      std::to_string(n_bins));
  }
  if (!std::isfinite(half_width) || half_width <= 0.0) {
    throw InvalidBins("half_width must be a positive real");
  }
  // n_bins - 2 interior bins spanning [1/2 - W, 1/2 + W]; the edge list is
  // symmetric about 1/2 and the tails are unbounded.
  const std::size_t interior = n_bins - 2;
  std::vector<double> edges(n_bins - 1);
  if (interior == 0) {
    edges[0] = 0.5;
  } else {
    const double h = 2.0 * half_width / static_cast<double>(interior);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      edges[j] = 0.5 + h * (static_cast<double>(j) -
                            static_cast<double>(interior) / 2.0);
    }
  }

  const auto bin_mass = [&](double mu, std::size_t bin) {
    const double hi = bin + 1 < n_bins
                          ? std_normal_cdf((edges[bin] - mu) / m.kappa)
                          : 1.0;
    const double lo =
        bin > 0 ? std_normal_cdf((edges[bin - 1] - mu) / m.kappa) : 0.0;
    return hi - lo;
  };

  std::vector<double> lik_min(n_bins), lik_maj(n_bins);
  double sum_min = 0.0, sum_maj = 0.0;
  for (std::size_t bin = 0; bin < n_bins; ++bin) {
    lik_min[bin] = bin_mass(0.0, bin);
    lik_maj[bin] = bin_mass(1.0, bin);
    sum_min += lik_min[bin];
    sum_maj += lik_maj[bin];
  }
  for (std::size_t bin = 0; bin < n_bins; ++bin) {
    lik_min[bin] /= sum_min;
    lik_maj[bin] /= sum_maj;
  }

  std::vector<std::string> labels(n_bins);
  for (std::size_t bin = 0; bin < n_bins; ++bin) {
    labels[bin] = "b" + std::to_string(bin);
  }
  std::vector<std::size_t> pairing(n_bins);
  for (std::size_t bin = 0; bin < n_bins; ++bin) {
    pairing[bin] = n_bins - 1 - bin;  // reflection about 1/2
  }
  Experiment exp(SignalSpace(std::move(labels)), std::move(lik_min),
                 std::move(lik_maj));
  return SymmetricExperiment{std::move(exp), Involution(std::move(pairing))};
}

}  // namespace noisyrec
