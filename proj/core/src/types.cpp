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

#include "noisyrec/types.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

namespace noisyrec {

namespace {

void validate_distribution_row(const std::vector<double>& row,
                               const char* name) {
  double sum = 0.0;
  for (double v : row) {
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream msg;
      msg << name << " contains an entry that is negative or not finite";
      throw InvalidExperiment(msg.str());
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kRowSumTol) {
    std::ostringstream msg;
    msg << name << " row sum " << sum << " deviates from 1 by more than "
        << kRowSumTol;
    throw InvalidExperiment(msg.str());
  }
}

}  // namespace

const char* to_string(AgentType type) {
  return type == AgentType::Minority ? "minority" : "majority";
}

Prior::Prior(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 0.5) {
    std::ostringstream msg;
    msg << "alpha must lie strictly between 0 and 1/2, got " << alpha;
    throw InvalidPrior(msg.str());
  }
}

SignalSpace::SignalSpace(
    std::vector<std::string> labels,
    std::optional<std::vector<std::vector<double>>> embedding)
    : labels_(std::move(labels)), embedding_(std::move(embedding)) {
  if (labels_.empty()) {
    throw InvalidExperiment("signal space must contain at least one signal");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw InvalidExperiment("duplicate signal label: " + label);
    }
  }
  if (embedding_) {
    if (embedding_->size() != labels_.size()) {
      throw InvalidExperiment(
          "embedding must provide exactly one point per signal");
    }
    const std::size_t dim = embedding_->front().size();
    for (const auto& point : *embedding_) {
      if (point.size() != dim || dim == 0) {
        throw InvalidExperiment(
            "embedding points must share one nonzero dimension");
      }
      for (double c : point) {
        if (!std::isfinite(c)) {
          throw InvalidExperiment("embedding coordinates must be finite");
        }
      }
    }
  }
}

SignalSpace SignalSpace::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("s" + std::to_string(i));
  }
  return SignalSpace(std::move(labels));
}

const std::string& SignalSpace::label(std::size_t i) const {
  if (i >= labels_.size()) {
    throw UnknownSignal("signal index " + std::to_string(i) +
                        " out of range for space of size " +
                        std::to_string(labels_.size()));
  }
  return labels_[i];
}

std::size_t SignalSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw UnknownSignal("unknown signal label: " + std::string(label));
}

Experiment::Experiment(SignalSpace space, std::vector<double> lik_min,
                       std::vector<double> lik_maj)
    : space_(std::move(space)),
      lik_min_(std::move(lik_min)),
      lik_maj_(std::move(lik_maj)) {
  if (lik_min_.size() != space_.size() || lik_maj_.size() != space_.size()) {
    throw InvalidExperiment(
        "likelihood rows must have one entry per signal: space " +
        std::to_string(space_.size()) + ", lik_min " +
        std::to_string(lik_min_.size()) + ", lik_maj " +
        std::to_string(lik_maj_.size()));
  }
  validate_distribution_row(lik_min_, "lik_min");
  validate_distribution_row(lik_maj_, "lik_maj");
}

PosteriorDistribution::PosteriorDistribution(
    std::vector<double> support, std::vector<double> masses,
    std::vector<std::size_t> source_signals)
    : support_(std::move(support)),
      masses_(std::move(masses)),
      source_signals_(std::move(source_signals)) {
  if (support_.size() != masses_.size() || support_.empty()) {
    throw InvalidDistribution(
        "support and masses must be nonempty and equally long");
  }
  if (!source_signals_.empty() && source_signals_.size() != support_.size()) {
    throw InvalidDistribution(
        "source_signals, when present, must parallel the support");
  }
  double sum = 0.0;
  for (double m : masses_) {
    if (!std::isfinite(m) || m < 0.0) {
      throw InvalidDistribution("masses must be finite and non-negative");
    }
    sum += m;
  }
  if (std::abs(sum - 1.0) > kRowSumTol) {
    std::ostringstream msg;
    msg << "masses sum " << sum << " deviates from 1 by more than "
        << kRowSumTol;
    throw InvalidDistribution(msg.str());
  }
  for (double x : support_) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
      throw InvalidDistribution("support values must lie in [0, 1]");
    }
  }
}

double PosteriorDistribution::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    m += masses_[i] * support_[i];
  }
  return m;
}

}  // namespace noisyrec
