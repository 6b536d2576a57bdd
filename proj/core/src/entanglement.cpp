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

#include "bosent/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "bosent/fq_oracle.hpp"

namespace bosent {

SpinDensityMatrix trace_out_distinguishability(const SymmetricTwoBosonState& s) {
  if (s.empty()) return {};
  const std::size_t d = s.terms().front().pair.first.dist.dim();
  const auto n = static_cast<Eigen::Index>(d);
  // amp[q](a, b) = <(L,X_a),(R,X_b)|Psi> projected on spin pattern q.
  std::array<Eigen::MatrixXcd, 4> amp;
  for (auto& m : amp) m = Eigen::MatrixXcd::Zero(n, n);

  for (const auto& term : s.terms()) {
    const auto m1 = detector_mode(term.pair.first.spatial);
    const auto m2 = detector_mode(term.pair.second.spatial);
    if (!m1 || !m2 || *m1 == *m2) {
      throw NotPostSelected("trace_out_distinguishability: state has terms outside the one-per-detector sector; "
                            "post-select first");
    }
    const auto& left = *m1 == Mode::Left ? term.pair.first : term.pair.second;
    const auto& right = *m1 == Mode::Left ? term.pair.second : term.pair.first;
    if (left.dist.dim() != d || right.dist.dim() != d) throw DimensionMismatch(d, left.dist.dim());
    auto& target = amp[static_cast<std::size_t>(two_qubit_index(left.spin, right.spin))];
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        target(a, b) += term.coefficient * left.dist.amplitudes[static_cast<std::size_t>(a)] *
                        right.dist.amplitudes[static_cast<std::size_t>(b)];
      }
    }
  }

  Eigen::Matrix4cd rho;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) rho(p, q) = (amp[p].array() * amp[q].array().conjugate()).sum();
  }
  return SpinDensityMatrix::from_matrix(rho);
}

SpinDensityMatrix postselected_spin_state(const SingleParticleState& a, const SingleParticleState& b) {
  return trace_out_distinguishability(postselect_one_per_detector(expand_in_detector_basis(a, b)));
}

namespace {

// σy ⊗ σy in the computational basis.
Eigen::Matrix4cd sigma_yy() {
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

// F with m = F F^dagger; eigenvalues within rounding of zero are dropped.
Eigen::Matrix4cd psd_factor(const Eigen::Matrix4cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(m);
  const Eigen::Vector4d values = eig.eigenvalues();
  const double cutoff = 16.0 * std::numeric_limits<double>::epsilon() * values.cwiseAbs().maxCoeff();
  Eigen::Vector4d roots;
  for (int i = 0; i < 4; ++i) roots(i) = values(i) > cutoff ? std::sqrt(values(i)) : 0.0;
  return eig.eigenvectors() * roots.asDiagonal();
}

}  // namespace

double wootters_concurrence(const Eigen::Matrix4cd& m) {
  const Eigen::Matrix4cd h = 0.5 * (m + m.adjoint());
  // The square roots of the eigenvalues of rho rho~ are the singular values of F^dagger (Y⊗Y) F*.
  const Eigen::Matrix4cd f = psd_factor(h);
  const Eigen::Matrix4cd b = f.adjoint() * sigma_yy() * f.conjugate();
  const Eigen::JacobiSVD<Eigen::Matrix4cd> svd(b);
  std::array<double, 4> lambda;
  for (int i = 0; i < 4; ++i) lambda[static_cast<std::size_t>(i)] = svd.singularValues()(i);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double wootters_concurrence(const SpinDensityMatrix& rho, Normalization mode) {
  if (mode == Normalization::Raw) return wootters_concurrence(rho.matrix);
  if (!(rho.weight > 0.0)) throw NoPostSelectionSupport();
  return wootters_concurrence(Eigen::Matrix4cd(rho.matrix / rho.weight));
}

double spatial_overlap_factor(const SpatialAmplitudes& alphas, const SpatialAmplitudes& betas) {
  return 4.0 * std::abs(alphas.left * alphas.right * betas.left * betas.right);
}

double concurrence_closed_form(const SpatialAmplitudes& alphas, const SpatialAmplitudes& betas, Complex overlap) {
  const double m = std::abs(overlap);
  if (m > 1.0 + kExactTolerance) {
    std::ostringstream out;
    out.precision(17);
    out << "distinguishability overlap magnitude " << m << " exceeds 1";
    throw std::invalid_argument(out.str());
  }
  return spatial_overlap_factor(alphas, betas) * m * m;
}

void validate(const NumberDistribution& dist) {
  double total = 0.0;
  for (const auto& b : dist.branches) {
    if (b.probability < 0.0) throw InvalidDistribution("number distribution has a negative probability");
    total += b.probability;
  }
  if (std::abs(total - 1.0) > kPipelineTolerance) {
    std::ostringstream out;
    out.precision(17);
    out << "number distribution probabilities sum to " << total << ", not 1";
    throw InvalidDistribution(out.str());
  }
}

double entanglement_of_particles(const NumberDistribution& dist) {
  validate(dist);
  double total = 0.0;
  for (const auto& b : dist.branches) {
    if (b.n_left != 1 || b.n_right != 1 || !b.state || b.probability == 0.0) continue;
    total += b.probability * wootters_concurrence(*b.state, Normalization::Normalized);
  }
  return total;
}

NumberDistribution number_distribution(const SingleParticleState& a, const SingleParticleState& b) {
  const auto weights = oracle::number_weights(oracle::symmetrize(a, b));
  NumberDistribution dist;
  dist.branches.push_back({2, 0, weights.both_left, std::nullopt});
  NumberBranch middle{1, 1, weights.one_each, std::nullopt};
  if (weights.one_each > 0.0) middle.state = postselected_spin_state(a, b);
  dist.branches.push_back(std::move(middle));
  dist.branches.push_back({0, 2, weights.both_right, std::nullopt});
  return dist;
}

}  // namespace bosent
