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

#include "bosent/core_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bosent {

Complex spin_inner(Spin bra, Spin ket) { return bra == ket ? Complex{1.0, 0.0} : Complex{0.0, 0.0}; }

const char* to_string(Spin s) { return s == Spin::Up ? "up" : "down"; }

const char* to_string(Mode m) { return m == Mode::Left ? "L" : "R"; }

namespace {

std::string mismatch_message(std::size_t lhs, std::size_t rhs) {
  std::ostringstream out;
  out << "incompatible distinguishability bases: dimension " << lhs << " vs " << rhs;
  return out.str();
}

std::string violation_message(const std::string& invariant, double norm_squared) {
  std::ostringstream out;
  out.precision(17);
  out << "invariant violated: " << invariant << " (norm^2 = " << norm_squared
      << ", deviation = " << std::abs(norm_squared - 1.0) << ")";
  return out.str();
}

}  // namespace

DimensionMismatch::DimensionMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument(mismatch_message(lhs, rhs)), lhs_(lhs), rhs_(rhs) {}

InvariantViolation::InvariantViolation(std::string invariant, double norm_squared)
    : std::invalid_argument(violation_message(invariant, norm_squared)),
      invariant_(std::move(invariant)),
      norm_squared_(norm_squared) {}

double InvariantViolation::deviation() const { return std::abs(norm_squared_ - 1.0); }

SpatialAmplitudes SpatialAmplitudes::normalized(Complex left, Complex right) {
  const double n = std::sqrt(std::norm(left) + std::norm(right));
  if (n == 0.0) {
    throw std::invalid_argument("spatial amplitudes: cannot normalize the zero vector");
  }
  return {left / n, right / n};
}

SpatialAmplitudes SpatialAmplitudes::at(Mode m) {
  return m == Mode::Left ? SpatialAmplitudes{1.0, 0.0} : SpatialAmplitudes{0.0, 1.0};
}

double DistVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

DistVector DistVector::normalized(std::vector<Complex> amplitudes) {
  DistVector v{std::move(amplitudes)};
  const double n = std::sqrt(v.norm_squared());
  if (v.amplitudes.empty() || n == 0.0) {
    throw std::invalid_argument("distinguishability vector: cannot normalize an empty or zero vector");
  }
  for (auto& a : v.amplitudes) a /= n;
  return v;
}

DistVector DistVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("distinguishability basis index out of range");
  DistVector v{std::vector<Complex>(dim, Complex{})};
  v.amplitudes[index] = 1.0;
  return v;
}

Complex dist_inner(const DistVector& bra, const DistVector& ket) {
  if (bra.dim() != ket.dim()) throw DimensionMismatch(bra.dim(), ket.dim());
  Complex total{};
  for (std::size_t a = 0; a < bra.dim(); ++a) total += std::conj(bra.amplitudes[a]) * ket.amplitudes[a];
  return total;
}

std::pair<DistVector, DistVector> dist_pair_with_overlap(Complex overlap) {
  const double m2 = std::norm(overlap);
  if (m2 > 1.0 + kExactTolerance) {
    throw std::invalid_argument("distinguishability overlap magnitude exceeds 1");
  }
  const double rest = std::sqrt(std::max(0.0, 1.0 - m2));
  return {DistVector{{1.0, 0.0}}, DistVector{{overlap, rest}}};
}

void validate(const SingleParticleState& s) {
  const double spatial = s.spatial.norm_squared();
  if (std::abs(spatial - 1.0) > kExactTolerance) {
    throw InvariantViolation("|a_L|^2 + |a_R|^2 = 1", spatial);
  }
  if (s.dist.dim() == 0) {
    throw InvariantViolation("distinguishability dimension >= 1", 0.0);
  }
  const double dist = s.dist.norm_squared();
  if (std::abs(dist - 1.0) > kExactTolerance) {
    throw InvariantViolation("sum_a |phi_a|^2 = 1", dist);
  }
}

Complex inner_single(const SingleParticleState& x, const SingleParticleState& y) {
  const Complex spatial = std::conj(x.spatial.left) * y.spatial.left + std::conj(x.spatial.right) * y.spatial.right;
  return spatial * spin_inner(x.spin, y.spin) * dist_inner(x.dist, y.dist);
}

std::optional<Mode> detector_mode(const SpatialAmplitudes& a) {
  if (a == SpatialAmplitudes::at(Mode::Left)) return Mode::Left;
  if (a == SpatialAmplitudes::at(Mode::Right)) return Mode::Right;
  return std::nullopt;
}

}  // namespace bosent
