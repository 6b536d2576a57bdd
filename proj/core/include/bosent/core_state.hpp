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

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bosent {

using Complex = std::complex<double>;

/// Tolerance for identities that hold exactly in real arithmetic.
inline constexpr double kExactTolerance = 1e-12;
/// Tolerance for comparisons made at the end of a numerical pipeline.
inline constexpr double kPipelineTolerance = 1e-9;

/// Pseudospin detected at the output ports. For photons UP is V and DOWN is H.
enum class Spin { Up = 0, Down = 1 };

/// Spatially separated detector modes, <L|R> = 0.
enum class Mode { Left = 0, Right = 1 };

Complex spin_inner(Spin bra, Spin ket);

const char* to_string(Spin s);
const char* to_string(Mode m);

/// Raised when two objects live over distinguishability bases of different size.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs);
  std::size_t lhs() const { return lhs_; }
  std::size_t rhs() const { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

/// Raised by validate(); names the violated invariant and the offending norm.
class InvariantViolation : public std::invalid_argument {
 public:
  InvariantViolation(std::string invariant, double norm_squared);
  const std::string& invariant() const { return invariant_; }
  double norm_squared() const { return norm_squared_; }
  double deviation() const;

 private:
  std::string invariant_;
  double norm_squared_;
};

/// Amplitudes on the two detector modes: |psi> = left|L> + right|R>.
struct SpatialAmplitudes {
  Complex left;
  Complex right;

  double norm_squared() const { return std::norm(left) + std::norm(right); }

  /// Rescales (left, right) to unit norm. Throws std::invalid_argument on the zero vector.
  static SpatialAmplitudes normalized(Complex left, Complex right);
  static SpatialAmplitudes at(Mode m);

  friend bool operator==(const SpatialAmplitudes&, const SpatialAmplitudes&) = default;
};

/// Unit vector over a finite orthonormal distinguishability basis {|X_a>}.
struct DistVector {
  std::vector<Complex> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
  double norm_squared() const;

  static DistVector normalized(std::vector<Complex> amplitudes);
  static DistVector basis(std::size_t dim, std::size_t index);

  friend bool operator==(const DistVector&, const DistVector&) = default;
};

/// <a|b>, conjugate-linear in the first argument.
Complex dist_inner(const DistVector& bra, const DistVector& ket);

/// Two unit vectors in d = 2 whose overlap <first|second> equals `overlap`.
/// Requires |overlap| <= 1.
std::pair<DistVector, DistVector> dist_pair_with_overlap(Complex overlap);

/// One boson: Psi = (spatial wavefunction, spin, distinguishability).
struct SingleParticleState {
  SpatialAmplitudes spatial;
  Spin spin = Spin::Up;
  DistVector dist;

  friend bool operator==(const SingleParticleState&, const SingleParticleState&) = default;
};

/// Checks every norm invariant to within kExactTolerance; throws InvariantViolation.
void validate(const SingleParticleState& s);

/// Factorized inner product <x|y> = <psi_x|psi_y> <s_x|s_y> <phi_x|phi_y>.
Complex inner_single(const SingleParticleState& x, const SingleParticleState& y);

/// Detector mode of a ket whose spatial part is exactly |L> or |R>, if any.
std::optional<Mode> detector_mode(const SpatialAmplitudes& a);

}  // namespace bosent
