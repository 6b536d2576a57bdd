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

#include <cstddef>

#include <Eigen/Core>

#include "bosent/core_state.hpp"
#include "bosent/spin_density.hpp"

/// Brute-force first-quantization reference: explicit pseudo-labeled tensors over
/// (mode ⊗ spin ⊗ dist)^⊗2. Everything is dense and enumerated; nothing here is
/// meant to be fast. The no-labeling calculus is checked against this code.
namespace bosent::oracle {

/// Dimension of one labeled slot: 2 modes × 2 spins × d.
constexpr std::size_t slot_dim(std::size_t dist_dim) { return 4 * dist_dim; }

constexpr std::size_t slot_index(Mode m, Spin s, std::size_t a, std::size_t dist_dim) {
  return (2 * static_cast<std::size_t>(m) + static_cast<std::size_t>(s)) * dist_dim + a;
}

/// |Psi>_a as a dense vector over one slot.
Eigen::VectorXcd slot_vector(const SingleParticleState& p);

/// Same, for an arbitrary spin vector (component 0 = up, 1 = down).
Eigen::VectorXcd slot_vector(const SpatialAmplitudes& spatial, const Eigen::Vector2cd& spin,
                             const DistVector& dist);

/// Two-slot tensor. amplitudes()(i, j) is the amplitude of slot 1 in basis
/// state i and slot 2 in basis state j.
class LabeledState {
 public:
  explicit LabeledState(std::size_t dist_dim);

  /// |first>_1 |second>_2
  static LabeledState product(const Eigen::VectorXcd& first, const Eigen::VectorXcd& second);

  std::size_t dist_dim() const { return dist_dim_; }
  std::size_t slot_dim() const { return static_cast<std::size_t>(amps_.rows()); }
  const Eigen::MatrixXcd& amplitudes() const { return amps_; }

  /// Exchanges the two pseudo-labels.
  LabeledState swapped() const;
  double norm_squared() const { return amps_.squaredNorm(); }

  LabeledState& operator+=(const LabeledState& other);
  LabeledState& operator*=(Complex c);
  friend LabeledState operator+(LabeledState a, const LabeledState& b) { return a += b; }
  friend LabeledState operator*(Complex c, LabeledState a) { return a *= c; }

 private:
  std::size_t dist_dim_;
  Eigen::MatrixXcd amps_;
};

/// (|A>_1|B>_2 + |B>_1|A>_2)/√2. Throws DimensionMismatch on unequal dist dimension.
LabeledState symmetrize(const SingleParticleState& a, const SingleParticleState& b);

/// Full sesquilinear inner product on the labeled space.
Complex labeled_inner(const LabeledState& bra, const LabeledState& ket);

/// Projects onto one particle at L and one at R, reads the L-particle's spin as
/// qubit 1 and the R-particle's spin as qubit 2, and traces out both
/// distinguishability factors. Unnormalized; weight is the trace.
SpinDensityMatrix oracle_postselected_density(const LabeledState& state);

/// Probabilities of the number distributions (n_L, n_R) = (2,0), (1,1), (0,2),
/// each <T|P_N|T>/<T|T>.
struct NumberWeights {
  double both_left = 0.0;
  double one_each = 0.0;
  double both_right = 0.0;
  double norm_squared = 0.0;
};
NumberWeights number_weights(const LabeledState& state);

/// Probability that both particles sit in `mode` and leave through different
/// ports of a polarization analyzer with orthonormal output spin vectors
/// `port0`, `port1`. Normalized by <T|T>.
double coincidence_probability(const LabeledState& state, Mode mode, const Eigen::Vector2cd& port0,
                               const Eigen::Vector2cd& port1);

}  // namespace bosent::oracle
