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

#pragma once

#include <cstdint>
#include <random>

#include "bosent/core_state.hpp"

namespace bosent {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream). Each simulation call or Monte Carlo
/// run owns one; nothing is shared.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Haar-like random draws for property checks.
SpatialAmplitudes random_spatial(Rng& rng);
DistVector random_dist(Rng& rng, std::size_t dim);
SingleParticleState random_particle(Rng& rng, std::size_t dist_dim);
SingleParticleState random_particle(Rng& rng, std::size_t dist_dim, Spin spin);
Complex random_overlap(Rng& rng);

}  // namespace bosent
