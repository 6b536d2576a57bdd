// Copyright 2026 The bosent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <vector>

#include "benchmark/benchmark.h"

#include "bosent/entanglement.hpp"
#include "bosent/fq_oracle.hpp"
#include "bosent/gaussian_fit.hpp"
#include "bosent/optics.hpp"
#include "bosent/sampling.hpp"

using namespace bosent;

static void BM_TransitionTwo(benchmark::State& state) {
  Rng rng = make_rng(1);
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = random_particle(rng, d), b = random_particle(rng, d);
  const auto c = random_particle(rng, d), e = random_particle(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(transition_two({c, e}, {a, b}));
}
BENCHMARK(BM_TransitionTwo)->Arg(1)->Arg(3)->Arg(16);

static void BM_OracleInner(benchmark::State& state) {
  Rng rng = make_rng(2);
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = random_particle(rng, d), b = random_particle(rng, d);
  const auto c = random_particle(rng, d), e = random_particle(rng, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::labeled_inner(oracle::symmetrize(c, e), oracle::symmetrize(a, b)));
  }
}
BENCHMARK(BM_OracleInner)->Arg(1)->Arg(3)->Arg(16);

static void BM_PostselectedState(benchmark::State& state) {
  Rng rng = make_rng(3);
  const auto a = random_particle(rng, 3, Spin::Up);
  const auto b = random_particle(rng, 3, Spin::Down);
  for (auto _ : state) benchmark::DoNotOptimize(postselected_spin_state(a, b));
}
BENCHMARK(BM_PostselectedState);

static void BM_Wootters(benchmark::State& state) {
  Rng rng = make_rng(4);
  const auto rho = postselected_spin_state(random_particle(rng, 3, Spin::Up), random_particle(rng, 3, Spin::Down));
  for (auto _ : state) benchmark::DoNotOptimize(wootters_concurrence(rho, Normalization::Normalized));
}
BENCHMARK(BM_Wootters);

static void BM_QuadratureOverlap(benchmark::State& state) {
  const double delta = optics::matched_delta(optics::kDefaultSigmaUm, optics::OverlapConvention::Quadrature);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optics::gaussian_overlap(static_cast<double>(state.range(0)),
                                                      optics::OverlapConvention::Quadrature, delta));
  }
}
BENCHMARK(BM_QuadratureOverlap)->Arg(0)->Arg(70)->Arg(300);

static void BM_FitGaussianDip(benchmark::State& state) {
  const double w = 132.0 / optics::kFwhmPerSigma;
  std::vector<optics::CurvePoint> pts;
  for (double x = -300.0; x <= 300.0; x += 10.0) pts.push_back({x, 1000.0 * (1.0 - 0.99 * std::exp(-0.5 * x * x / (w * w)))});
  for (auto _ : state) benchmark::DoNotOptimize(optics::fit_gaussian_dip(pts));
}
BENCHMARK(BM_FitGaussianDip);

BENCHMARK_MAIN();
