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

#include <array>
#include <cstdint>
#include <string>

#include "noisyrec/types.hpp"

namespace noisyrec {

/// Piecewise value function on [0, 1]: affine segments between consecutive
/// breakpoints plus explicit point values at the breakpoints, so jump
/// discontinuities like the indicator 1{x >= 1/2} are represented exactly
/// (left limit 0, point value 1 at 1/2).
class PiecewiseValue {
 public:
  struct Segment {
    double intercept = 0.0;
    double slope = 0.0;
    double at(double x) const { return intercept + slope * x; }
  };

  /// breakpoints must start at 0, end at 1, and increase strictly;
  /// segments.size() == breakpoints.size() - 1 (segment i lives on the open
  /// interval between breakpoints i and i+1);
  /// point_values.size() == breakpoints.size().
  PiecewiseValue(std::vector<double> breakpoints, std::vector<Segment> segments,
                 std::vector<double> point_values);

  static PiecewiseValue indicator_at_half();
  static PiecewiseValue affine(double intercept, double slope);

  /// Point value at breakpoints, segment value elsewhere.
  double operator()(double x) const;

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const Segment> segments() const { return segments_; }
  std::span<const double> point_values() const { return point_values_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<Segment> segments_;
  std::vector<double> point_values_;
};

/// Least concave majorant of f evaluated at the prior: the upper convex hull
/// over breakpoint values and one-sided segment limits. For the indicator
/// this is 2x on [0, 1/2] and 1 above.
double concave_closure_at(const PiecewiseValue& f, double prior);

/// Largest achievable minority share over all experiments: the concave
/// closure of the allocation indicator at the prior, i.e. 2*alpha (computed,
/// not hard-coded).
double max_minority_share(const Prior& prior);

/// Triangle of utility profiles (u_min, u_maj), vertices counterclockwise,
/// each annotated with the name of the constructing experiment.
struct UtilityTriangle {
  std::array<std::array<double, 2>, 3> vertices;
  std::array<std::string, 3> constructors;
};

/// conv{(0,1), (1,1), (1, (1-2a)/(1-a))}: utilities achievable under
/// arbitrary measurement error.
UtilityTriangle general_utility_triangle(const Prior& prior);

/// conv{(0,1), (1,1), (1/2, 1 - a/(2(1-a)))}: the conjectured symmetric
/// region. Its third vertex is attained by symmetric_vertex_experiment, but
/// symmetric experiments can realize utilities outside this triangle (its
/// lower-right edge is the share = alpha line; see symmetry.hpp).
UtilityTriangle symmetric_utility_triangle(const Prior& prior);

/// True iff the point lies within tol of the closed triangle (signed
/// distance to every edge >= -tol).
bool contains(const UtilityTriangle& tri, std::array<double, 2> point,
              double tol);

/// Random experiment with flat-simplex likelihood rows.
Experiment random_experiment(std::size_t n_signals, std::uint64_t seed);

/// Utilities of n random experiments under FavorMinority. General draws use
/// signal counts uniform in [2, max_signals]; symmetric draws use
/// random_symmetric_experiment with pairs uniform in [1, max_signals/2] and
/// up to 3 fixed signals. Point i uses the derived seed seed + i; output
/// order is by index.
std::vector<std::array<double, 2>> empirical_cloud(const Prior& prior,
                                                   std::size_t n_experiments,
                                                   std::size_t max_signals,
                                                   bool symmetric,
                                                   std::uint64_t seed);

}  // namespace noisyrec
