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

#include "noisyrec/region.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "noisyrec/allocation.hpp"
#include "noisyrec/rng.hpp"
#include "noisyrec/symmetry.hpp"

namespace noisyrec {

PiecewiseValue::PiecewiseValue(std::vector<double> breakpoints,
                               std::vector<Segment> segments,
                               std::vector<double> point_values)
    : breakpoints_(std::move(breakpoints)),
      segments_(std::move(segments)),
      point_values_(std::move(point_values)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0.0 ||
      breakpoints_.back() != 1.0) {
    throw InvalidPiecewiseValue("breakpoints must run from 0 to 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1])) {
      throw InvalidPiecewiseValue("breakpoints must increase strictly");
    }
  }
  if (segments_.size() != breakpoints_.size() - 1 ||
      point_values_.size() != breakpoints_.size()) {
    throw InvalidPiecewiseValue(
        "need one segment per interval and one point value per breakpoint");
  }
  for (double v : point_values_) {
    if (!std::isfinite(v)) {
      throw InvalidPiecewiseValue("point values must be finite");
    }
  }
  for (const Segment& seg : segments_) {
    if (!std::isfinite(seg.intercept) || !std::isfinite(seg.slope)) {
      throw InvalidPiecewiseValue("segment coefficients must be finite");
    }
  }
}

PiecewiseValue PiecewiseValue::indicator_at_half() {
  return PiecewiseValue({0.0, 0.5, 1.0},
                        {Segment{0.0, 0.0}, Segment{1.0, 0.0}},
                        {0.0, 1.0, 1.0});
}

PiecewiseValue PiecewiseValue::affine(double intercept, double slope) {
  return PiecewiseValue({0.0, 1.0}, {Segment{intercept, slope}},
                        {intercept, intercept + slope});
}

double PiecewiseValue::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw OutOfRange("piecewise value evaluated outside [0, 1]");
  }
  const auto it =
      std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (it != breakpoints_.end() && *it == x) return point_values_[idx];
  return segments_[idx - 1].at(x);
}

double concave_closure_at(const PiecewiseValue& f, double prior) {
  if (!(prior >= 0.0 && prior <= 1.0)) {
    throw OutOfRange("prior outside [0, 1]");
  }
  // Candidate graph points: breakpoint values plus one-sided segment limits.
  // The least concave majorant must dominate limits of f, so open endpoints
  // enter with their limit values.
  std::map<double, double> best;
  const auto offer = [&best](double x, double v) {
    auto [it, inserted] = best.emplace(x, v);
    if (!inserted && v > it->second) it->second = v;
  };
  const auto bps = f.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    offer(bps[i], f.point_values()[i]);
  }
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const PiecewiseValue::Segment& seg = f.segments()[i];
    offer(bps[i], seg.at(bps[i]));
    offer(bps[i + 1], seg.at(bps[i + 1]));
  }

  // Upper convex hull, left to right.
  std::vector<std::array<double, 2>> hull;
  for (const auto& [x, v] : best) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      const double cross = (b[0] - a[0]) * (v - a[1]) - (b[1] - a[1]) * (x - a[0]);
      if (cross >= 0.0) {
        hull.pop_back();  // b lies on or below the chord a->(x, v)
      } else {
        break;
      }
    }
    hull.push_back({x, v});
  }

  const auto it = std::lower_bound(
      hull.begin(), hull.end(), prior,
      [](const std::array<double, 2>& p, double x) { return p[0] < x; });
  if (it != hull.end() && (*it)[0] == prior) return (*it)[1];
  const auto& right = *it;
  const auto& left = *(it - 1);
  const double slope = (right[1] - left[1]) / (right[0] - left[0]);
  return left[1] + (prior - left[0]) * slope;
}

double max_minority_share(const Prior& prior) {
  return concave_closure_at(PiecewiseValue::indicator_at_half(), prior.alpha());
}

namespace {

UtilityTriangle normalized_ccw(UtilityTriangle tri) {
  const auto& [a, b, c] = tri.vertices;
  const double signed_area = (b[0] - a[0]) * (c[1] - a[1]) -
                             (b[1] - a[1]) * (c[0] - a[0]);
  if (signed_area < 0.0) {
    std::swap(tri.vertices[1], tri.vertices[2]);
    std::swap(tri.constructors[1], tri.constructors[2]);
  }
  return tri;
}

}  // namespace

UtilityTriangle general_utility_triangle(const Prior& prior) {
  const double third = (1.0 - 2.0 * prior.alpha()) / prior.majority();
  return normalized_ccw(UtilityTriangle{
      {{{0.0, 1.0}, {1.0, third}, {1.0, 1.0}}},
      {"uninformative", "extremal(p=2*alpha)", "perfect"}});
}

UtilityTriangle symmetric_utility_triangle(const Prior& prior) {
  const double third = 1.0 - prior.alpha() / (2.0 * prior.majority());
  return normalized_ccw(UtilityTriangle{
      {{{0.0, 1.0}, {0.5, third}, {1.0, 1.0}}},
      {"uninformative", "symmetric-vertex", "perfect"}});
}

bool contains(const UtilityTriangle& tri, std::array<double, 2> point,
              double tol) {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& a = tri.vertices[i];
    const auto& b = tri.vertices[(i + 1) % 3];
    const double ex = b[0] - a[0];
    const double ey = b[1] - a[1];
    const double cross = ex * (point[1] - a[1]) - ey * (point[0] - a[0]);
    const double len = std::hypot(ex, ey);
    if (cross < -tol * len) return false;
  }
  return true;
}

namespace {

Experiment random_experiment_from(std::size_t n_signals, Rng& rng) {
  std::vector<double> lik_min = sample_simplex(n_signals, rng);
  std::vector<double> lik_maj = sample_simplex(n_signals, rng);
  return Experiment(SignalSpace::indexed(n_signals), std::move(lik_min),
                    std::move(lik_maj));
}

}  // namespace

Experiment random_experiment(std::size_t n_signals, std::uint64_t seed) {
  if (n_signals == 0) {
    throw OutOfRange("experiment needs at least one signal");
  }
  Rng rng(seed);
  return random_experiment_from(n_signals, rng);
}

std::vector<std::array<double, 2>> empirical_cloud(const Prior& prior,
                                                   std::size_t n_experiments,
                                                   std::size_t max_signals,
                                                   bool symmetric,
                                                   std::uint64_t seed) {
  if (n_experiments == 0) {
    throw OutOfRange("n_experiments must be at least 1");
  }
  if (max_signals < 2) {
    throw OutOfRange("max_signals must be at least 2");
  }
  std::vector<std::array<double, 2>> points;
  points.reserve(n_experiments);
  for (std::size_t i = 0; i < n_experiments; ++i) {
    Rng rng(seed + i);
    GroupUtilities gu;
    if (symmetric) {
      const std::size_t max_pairs = std::max<std::size_t>(1, max_signals / 2);
      const std::size_t n_pairs = 1 + rng.next_below(max_pairs);
      const std::size_t n_fixed = rng.next_below(4);
      const SymmetricExperiment se =
          random_symmetric_experiment(prior, n_pairs, n_fixed, rng.next_u64());
      gu = group_utilities(se.experiment, prior, TieBreak::FavorMinority);
    } else {
      const std::size_t n_signals = 2 + rng.next_below(max_signals - 1);
      const Experiment exp = random_experiment_from(n_signals, rng);
      gu = group_utilities(exp, prior, TieBreak::FavorMinority);
    }
    points.push_back({gu.u_min, gu.u_maj});
  }
  return points;
}

}  // namespace noisyrec
