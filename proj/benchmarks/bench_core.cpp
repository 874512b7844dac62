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

#include <benchmark/benchmark.h>

#include "noisyrec/allocation.hpp"
#include "noisyrec/constructions.hpp"
#include "noisyrec/experiment.hpp"
#include "noisyrec/gaussian.hpp"
#include "noisyrec/montecarlo.hpp"
#include "noisyrec/region.hpp"
#include "noisyrec/symmetry.hpp"

namespace {

void BM_InducedPosterior(benchmark::State& state) {
  const noisyrec::Prior prior(0.25);
  const noisyrec::Experiment exp =
      noisyrec::random_experiment(state.range(0), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        noisyrec::induced_posterior_distribution(exp, prior));
  }
}
BENCHMARK(BM_InducedPosterior)->Arg(8)->Arg(64)->Arg(512);

void BM_MinorityShare(benchmark::State& state) {
  const noisyrec::Prior prior(0.25);
  const noisyrec::Experiment exp =
      noisyrec::random_experiment(state.range(0), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(noisyrec::minority_share(exp, prior));
  }
}
BENCHMARK(BM_MinorityShare)->Arg(8)->Arg(512);

void BM_ConcaveClosureIndicator(benchmark::State& state) {
  const noisyrec::PiecewiseValue indicator =
      noisyrec::PiecewiseValue::indicator_at_half();
  double prior = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(noisyrec::concave_closure_at(indicator, prior));
    prior = prior < 0.49 ? prior + 0.001 : 0.01;
  }
}
BENCHMARK(BM_ConcaveClosureIndicator);

void BM_StdNormalCdf(benchmark::State& state) {
  double x = -8.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(noisyrec::std_normal_cdf(x));
    x = x < 8.0 ? x + 1e-3 : -8.0;
  }
}
BENCHMARK(BM_StdNormalCdf);

void BM_SimulateDiscrete(benchmark::State& state) {
  const noisyrec::Prior prior(0.25);
  const noisyrec::Experiment exp =
      noisyrec::symmetric_vertex_experiment(prior).experiment;
  for (auto _ : state) {
    benchmark::DoNotOptimize(noisyrec::simulate_discrete(
        exp, prior, noisyrec::TieBreak::FavorMinority, state.range(0), 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateDiscrete)->Arg(100000);

void BM_SimulateGaussian(benchmark::State& state) {
  const noisyrec::GaussianModel m(noisyrec::Prior(0.25), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(noisyrec::simulate_gaussian(
        m, noisyrec::TieBreak::FavorMinority, state.range(0), 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateGaussian)->Arg(100000);

void BM_RandomSymmetricExperiment(benchmark::State& state) {
  const noisyrec::Prior prior(0.25);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        noisyrec::random_symmetric_experiment(prior, 8, 3, seed++));
  }
}
BENCHMARK(BM_RandomSymmetricExperiment);

}  // namespace

BENCHMARK_MAIN();
