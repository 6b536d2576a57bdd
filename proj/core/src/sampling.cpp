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

#include "bosent/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace bosent {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

namespace {

Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

SpatialAmplitudes random_spatial(Rng& rng) {
  const Complex l = gaussian_complex(rng);
  const Complex r = gaussian_complex(rng);
  return SpatialAmplitudes::normalized(l, r);
}

DistVector random_dist(Rng& rng, std::size_t dim) {
  std::vector<Complex> v(dim);
  for (auto& a : v) a = gaussian_complex(rng);
  return DistVector::normalized(std::move(v));
}

SingleParticleState random_particle(Rng& rng, std::size_t dist_dim, Spin spin) {
  SpatialAmplitudes spatial = random_spatial(rng);
  DistVector dist = random_dist(rng, dist_dim);
  return {spatial, spin, std::move(dist)};
}

SingleParticleState random_particle(Rng& rng, std::size_t dist_dim) {
  std::bernoulli_distribution coin(0.5);
  const Spin spin = coin(rng) ? Spin::Up : Spin::Down;
  return random_particle(rng, dist_dim, spin);
}

Complex random_overlap(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double radius = u(rng);
  const double phase = 2.0 * std::numbers::pi * u(rng);
  return std::polar(radius, phase);
}

}  // namespace bosent
