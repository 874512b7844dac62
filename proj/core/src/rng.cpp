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

#include "noisyrec/rng.hpp"

#include <cmath>

namespace noisyrec {

double Rng::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, r2;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    r2 = u * u + v * v;
  } while (r2 >= 1.0 || r2 == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(r2) / r2);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

std::vector<double> sample_simplex(std::size_t n, Rng& rng) {
  std::vector<double> out(n);
  double sum = 0.0;
  for (double& v : out) {
    v = -std::log(1.0 - rng.next_double());
    sum += v;
  }
  for (double& v : out) v /= sum;
  return out;
}

}  // namespace noisyrec
