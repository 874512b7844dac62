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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "noisyrec/errors.hpp"

namespace noisyrec {

// Row sums are one summation; Bayes plausibility composes products and gets
// the looser tolerance. Symmetry default absorbs quadrature error from
// discretized continuous models.
inline constexpr double kRowSumTol = 1e-12;
inline constexpr double kBayesPlausibilityTol = 1e-10;
inline constexpr double kSymmetryTol = 1e-9;

/// The two agent types. The same enumeration labels content: content j is the
/// item preferred exactly by type j.
enum class AgentType { Minority, Majority };
using Content = AgentType;

const char* to_string(AgentType type);

/// Minority incidence alpha, restricted to the open interval (0, 1/2).
class Prior {
 public:
  explicit Prior(double alpha);

  double alpha() const { return alpha_; }
  double majority() const { return 1.0 - alpha_; }

 private:
  double alpha_;
};

/// Ordered finite signal space. The optional embedding assigns one coordinate
/// point per signal and is consumed only by the midplane pairing.
class SignalSpace {
 public:
  explicit SignalSpace(
      std::vector<std::string> labels,
      std::optional<std::vector<std::vector<double>>> embedding = std::nullopt);

  /// Labels "s0", "s1", ..., no embedding.
  static SignalSpace indexed(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(std::size_t i) const;
  std::size_t index_of(std::string_view label) const;
  const std::optional<std::vector<std::vector<double>>>& embedding() const {
    return embedding_;
  }

 private:
  std::vector<std::string> labels_;
  std::optional<std::vector<std::vector<double>>> embedding_;
};

/// A finite statistical experiment: one likelihood row per agent type over a
/// shared signal space. Rows are validated to be distributions (entries >= 0,
/// sum within kRowSumTol of one).
class Experiment {
 public:
  Experiment(SignalSpace space, std::vector<double> lik_min,
             std::vector<double> lik_maj);

  const SignalSpace& space() const { return space_; }
  std::size_t size() const { return lik_min_.size(); }
  std::span<const double> lik_min() const { return lik_min_; }
  std::span<const double> lik_maj() const { return lik_maj_; }
  std::span<const double> likelihoods(AgentType type) const {
    return type == AgentType::Minority ? lik_min() : lik_maj();
  }

 private:
  SignalSpace space_;
  std::vector<double> lik_min_;
  std::vector<double> lik_maj_;
};

/// Finite distribution over posterior beliefs in [0, 1]. Duplicate support
/// points are kept as-is; when induced from an experiment, source_signals
/// maps each support point back to its signal index.
class PosteriorDistribution {
 public:
  PosteriorDistribution(std::vector<double> support, std::vector<double> masses,
                        std::vector<std::size_t> source_signals = {});

  std::size_t size() const { return support_.size(); }
  std::span<const double> support() const { return support_; }
  std::span<const double> masses() const { return masses_; }
  std::span<const std::size_t> source_signals() const { return source_signals_; }
  double mean() const;

 private:
  std::vector<double> support_;
  std::vector<double> masses_;
  std::vector<std::size_t> source_signals_;
};

}  // namespace noisyrec
