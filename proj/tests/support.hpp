// Shared test helpers.
#pragma once

#include <vector>

#include "noisyrec/symmetry.hpp"
#include "noisyrec/types.hpp"

namespace testsupport {

inline noisyrec::Experiment rows(std::vector<double> lik_min,
                                 std::vector<double> lik_maj) {
  const std::size_t n = lik_min.size();
  return noisyrec::Experiment(noisyrec::SignalSpace::indexed(n),
                              std::move(lik_min), std::move(lik_maj));
}

// Binary symmetric channel: two signals, crossover probability e, swap
// involution. Satisfies the symmetry definition for every e.
inline noisyrec::SymmetricExperiment bsc(double e) {
  return noisyrec::SymmetricExperiment{
      rows({1.0 - e, e}, {e, 1.0 - e}), noisyrec::Involution({1, 0})};
}

}  // namespace testsupport
