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

#include <array>
#include <cstdint>

#include <Eigen/Core>

#include "bosent/sampling.hpp"
#include "bosent/spin_density.hpp"

namespace bosent::optics {

/// Local analyzer basis for one detector.
enum class Basis { Z, X, Y };

/// The two-detector settings used to estimate an X-shaped two-qubit state.
inline constexpr std::array<std::array<Basis, 2>, 5> kAnalyzerSettings{{
    {Basis::Z, Basis::Z},
    {Basis::X, Basis::X},
    {Basis::Y, Basis::Y},
    {Basis::X, Basis::Y},
    {Basis::Y, Basis::X},
}};

/// Coincidence counts per setting; outcome index 2·k_L + k_R, k = 0 for the +1 eigenvector.
struct PolarizationCounts {
  std::array<std::array<double, 4>, kAnalyzerSettings.size()> counts{};
};

/// Outcome probabilities of every setting for a normalized two-qubit state.
PolarizationCounts outcome_probabilities(const Eigen::Matrix4cd& rho);

/// Expected coincidence counts: shots · weight · P(outcome).
PolarizationCounts expected_counts(const SpinDensityMatrix& rho, double shots);

/// Poisson draw around expected_counts.
PolarizationCounts simulate_polarization_counts(const SpinDensityMatrix& rho, double shots, Rng& rng);

/// Concurrence of the X-state reconstructed from coincidence counts
/// (populations from ZZ, coherences from XX, YY, XY, YX), clamped to [0, 1].
/// Throws std::domain_error when a setting recorded no coincidences.
double estimate_concurrence(const PolarizationCounts& counts);

}  // namespace bosent::optics
