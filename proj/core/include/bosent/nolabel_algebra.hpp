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

#include <stdexcept>
#include <utility>
#include <vector>

#include "bosent/core_state.hpp"

namespace bosent {

using ParticlePair = std::pair<SingleParticleState, SingleParticleState>;

/// Deterministic total order on single-particle kets: spatial amplitudes
/// (so |L> sorts before |R>), then spin, then distinguishability, lexicographic.
bool ket_less(const SingleParticleState& a, const SingleParticleState& b);

/// One term c·|A, B> of a symmetric two-boson ket. `pair.first` never sorts
/// after `pair.second`.
struct SymmetricTerm {
  Complex coefficient;
  ParticlePair pair;
};

/// Complex-weighted sum of unordered pairs, kept canonical: pair members are
/// ordered by ket_less, terms are sorted, and equal pairs are merged.
class SymmetricTwoBosonState {
 public:
  SymmetricTwoBosonState() = default;

  /// Adds c·|a, b>; |a, b> and |b, a> are the same term.
  void add(Complex c, const SingleParticleState& a, const SingleParticleState& b);

  const std::vector<SymmetricTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const SymmetricTwoBosonState& x, const SymmetricTwoBosonState& y);

 private:
  std::vector<SymmetricTerm> terms_;
};

/// <C, D|A, B> = <C|A><D|B> + <C|B><D|A>.
Complex transition_two(const ParticlePair& bra, const ParticlePair& ket);

/// Sesquilinear extension of transition_two to sums of pairs.
Complex inner(const SymmetricTwoBosonState& bra, const SymmetricTwoBosonState& ket);

/// Single-particle residual of a one-particle projection: a formal sum of
/// weighted kets.
struct SingleParticleResidual {
  std::vector<std::pair<Complex, SingleParticleState>> terms;

  /// <D| applied to the residual.
  Complex contract(const SingleParticleState& d) const;
  bool empty() const { return terms.empty(); }
};

/// <C|A, B> = (1/√2)(<C|A>|B> + <C|B>|A>). Terms with an exactly zero weight are dropped.
SingleParticleResidual project_single(const SingleParticleState& bra, const ParticlePair& ket);

/// Raised when expand_in_detector_basis gets anything but (spin up, spin down).
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rewrites |(psi_A, ↑, phi_A), (psi_B, ↓, phi_B)> in the detector basis:
///   a_l b_l |(L,↑,phi_A),(L,↓,phi_B)> + a_l b_r |(L,↑,phi_A),(R,↓,phi_B)>
/// + a_r b_l |(L,↓,phi_B),(R,↑,phi_A)> + a_r b_r |(R,↑,phi_A),(R,↓,phi_B)>.
/// Exactly-zero coefficients are omitted.
SymmetricTwoBosonState expand_in_detector_basis(const SingleParticleState& a, const SingleParticleState& b);

/// Keeps the terms with one particle at L and one at R; no renormalization.
/// Every ket must be a detector-basis ket (std::invalid_argument otherwise).
SymmetricTwoBosonState postselect_one_per_detector(const SymmetricTwoBosonState& s);

}  // namespace bosent
