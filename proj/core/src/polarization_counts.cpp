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

#include "bosent/polarization_counts.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bosent::optics {

namespace {

// Eigenvector k of the local Pauli operator for `b`; k = 0 is the +1 eigenvector.
Eigen::Vector2cd analyzer_vector(Basis b, int k) {
  const double r = 1.0 / std::sqrt(2.0);
  const double sign = k == 0 ? 1.0 : -1.0;
  switch (b) {
    case Basis::Z:
      return k == 0 ? Eigen::Vector2cd{1.0, 0.0} : Eigen::Vector2cd{0.0, 1.0};
    case Basis::X:
      return {r, sign * r};
    case Basis::Y:
      return {r, Complex{0.0, sign * r}};
  }
  return {};
}

Eigen::Matrix2cd pauli(Basis b) {
  Eigen::Matrix2cd m;
  switch (b) {
    case Basis::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    case Basis::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Basis::Y:
      m << 0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0;
      break;
  }
  return m;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  }
  return out;
}

double correlator(const std::array<double, 4>& c) {
  const double total = c[0] + c[1] + c[2] + c[3];
  if (!(total > 0.0)) throw std::domain_error("analyzer setting recorded no coincidences");
  return (c[0] - c[1] - c[2] + c[3]) / total;
}

}  // namespace

PolarizationCounts outcome_probabilities(const Eigen::Matrix4cd& rho) {
  PolarizationCounts out;
  for (std::size_t s = 0; s < kAnalyzerSettings.size(); ++s) {
    for (int kl = 0; kl < 2; ++kl) {
      for (int kr = 0; kr < 2; ++kr) {
        const Eigen::Vector2cd l = analyzer_vector(kAnalyzerSettings[s][0], kl);
        const Eigen::Vector2cd r = analyzer_vector(kAnalyzerSettings[s][1], kr);
        Eigen::Vector4cd v;
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) v(2 * i + j) = l(i) * r(j);
        }
        out.counts[s][static_cast<std::size_t>(2 * kl + kr)] = std::max(0.0, (v.adjoint() * rho * v)(0, 0).real());
      }
    }
  }
  return out;
}

PolarizationCounts expected_counts(const SpinDensityMatrix& rho, double shots) {
  PolarizationCounts out;
  if (!(rho.weight > 0.0)) return out;
  out = outcome_probabilities(rho.normalized());
  for (auto& setting : out.counts) {
    for (auto& c : setting) c *= shots * rho.weight;
  }
  return out;
}

PolarizationCounts simulate_polarization_counts(const SpinDensityMatrix& rho, double shots, Rng& rng) {
  PolarizationCounts out = expected_counts(rho, shots);
  for (auto& setting : out.counts) {
    for (auto& c : setting) {
      if (c > 0.0) {
        std::poisson_distribution<std::uint64_t> poisson(c);
        c = static_cast<double>(poisson(rng));
      }
    }
  }
  return out;
}

double estimate_concurrence(const PolarizationCounts& counts) {
  const auto& zz = counts.counts[0];
  const double total = zz[0] + zz[1] + zz[2] + zz[3];
  if (!(total > 0.0)) throw std::domain_error("analyzer setting recorded no coincidences");
  const double p11 = zz[0] / total, p22 = zz[1] / total, p33 = zz[2] / total, p44 = zz[3] / total;

  // <σa⊗σb> is linear in the four real coherence parameters
  // (Re ρ14, Im ρ14, Re ρ23, Im ρ23); build that map from the Pauli matrices.
  Eigen::Matrix4d design;
  Eigen::Vector4d measured;
  for (std::size_t s = 1; s < kAnalyzerSettings.size(); ++s) {
    const Eigen::Matrix4cd op = kron(pauli(kAnalyzerSettings[s][0]), pauli(kAnalyzerSettings[s][1]));
    const auto row = static_cast<Eigen::Index>(s - 1);
    const std::array<std::pair<int, int>, 2> elements{{{0, 3}, {1, 2}}};
    for (std::size_t e = 0; e < elements.size(); ++e) {
      const auto [i, j] = elements[e];
      // z|i><j| + conj(z)|j><i| contributes 2 Re(z <j|op|i>).
      const Complex m = op(j, i);
      design(row, static_cast<Eigen::Index>(2 * e)) = 2.0 * m.real();
      design(row, static_cast<Eigen::Index>(2 * e + 1)) = -2.0 * m.imag();
    }
    measured(row) = correlator(counts.counts[s]);
  }
  const Eigen::Vector4d coherences = design.fullPivLu().solve(measured);
  const double rho14 = std::hypot(coherences(0), coherences(1));
  const double rho23 = std::hypot(coherences(2), coherences(3));
  const double c = 2.0 * std::max({0.0, rho23 - std::sqrt(p11 * p44), rho14 - std::sqrt(p22 * p33)});
  return std::clamp(c, 0.0, 1.0);
}

}  // namespace bosent::optics
