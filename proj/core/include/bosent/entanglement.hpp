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

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "bosent/core_state.hpp"
#include "bosent/nolabel_algebra.hpp"
#include "bosent/spin_density.hpp"

namespace bosent {

class NotPostSelected : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoPostSelectionSupport : public std::domain_error {
 public:
  NoPostSelectionSupport() : std::domain_error("no post-selection support: weight is zero") {}
};

/// Spin state seen by the L and R detectors after tracing out distinguishability:
///   rho = sum_{a,b} <(L,X_a),(R,X_b)|Psi><Psi|(L,X_a),(R,X_b)>.
/// The input must already be post-selected to one particle per detector.
SpinDensityMatrix trace_out_distinguishability(const SymmetricTwoBosonState& s);

/// Convenience: expand, post-select and trace out for (spin up, spin down) inputs.
SpinDensityMatrix postselected_spin_state(const SingleParticleState& a, const SingleParticleState& b);

enum class Normalization { Normalized, Raw };

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), with l_i the decreasing
/// square roots of the eigenvalues of sqrt(m) m~ sqrt(m), m~ = (Y⊗Y) m* (Y⊗Y).
double wootters_concurrence(const Eigen::Matrix4cd& m);

/// Concurrence of rho.matrix / rho.weight (Normalized) or of rho.matrix as is (Raw).
/// Normalized with zero weight throws NoPostSelectionSupport.
double wootters_concurrence(const SpinDensityMatrix& rho, Normalization mode);

/// C = 4 |a_l a_r b_l b_r| · |overlap|^2.
/// Throws std::invalid_argument when |overlap| > 1 + kExactTolerance.
double concurrence_closed_form(const SpatialAmplitudes& alphas, const SpatialAmplitudes& betas, Complex overlap);

/// Spatial-overlap factor 4 |a_l a_r b_l b_r|.
double spatial_overlap_factor(const SpatialAmplitudes& alphas, const SpatialAmplitudes& betas);

struct NumberBranch {
  int n_left = 0;
  int n_right = 0;
  double probability = 0.0;
  /// Spin state of a (1,1) branch; empty for bunched branches, which are separable.
  std::optional<SpinDensityMatrix> state;
};

struct NumberDistribution {
  std::vector<NumberBranch> branches;
};

class InvalidDistribution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidDistribution if a probability is negative or they do not sum to 1 (1e-9).
void validate(const NumberDistribution& dist);

/// E_P = sum_N p_N E(Psi_N). E of a (1,1) branch is its normalized Wootters
/// concurrence; bunched branches contribute zero.
double entanglement_of_particles(const NumberDistribution& dist);

/// Number distribution of |(psi_A, ↑, phi_A), (psi_B, ↓, phi_B)>. Branch
/// probabilities come from the labeled-tensor norm decomposition; the (1,1)
/// state comes from the no-labeling pipeline.
NumberDistribution number_distribution(const SingleParticleState& a, const SingleParticleState& b);

}  // namespace bosent
