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

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "gtest/gtest.h"

#include "bosent/nolabel_algebra.hpp"
#include "bosent/optics.hpp"
#include "bosent/sampling.hpp"
#include "unit/brute_force.hpp"

using namespace bosent;

namespace {

// Textbook form in extended precision: square roots of the eigenvalues of the
// non-Hermitian rho·rho~.
double brute_wootters(const Eigen::Matrix4cd& rho) {
  using CL = std::complex<long double>;
  using ML = Eigen::Matrix<CL, 4, 4>;
  ML r = rho.cast<CL>();
  ML yy = ML::Zero();
  yy(0, 3) = -1.0L;
  yy(1, 2) = 1.0L;
  yy(2, 1) = 1.0L;
  yy(3, 0) = -1.0L;
  const ML flipped = yy * r.conjugate() * yy;
  Eigen::ComplexEigenSolver<ML> solver(r * flipped);
  std::vector<long double> l;
  for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0L, solver.eigenvalues()(i).real())));
  std::sort(l.rbegin(), l.rend());
  return static_cast<double>(std::max(0.0L, l[0] - l[1] - l[2] - l[3]));
}

Eigen::Matrix4cd to_eigen(const std::vector<std::vector<Complex>>& m) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out(i, j) = m[i][j];
  }
  return out;
}

Eigen::Matrix4cd bell() {
  Eigen::Vector4cd psi(0.0, 1.0, 1.0, 0.0);
  psi /= std::sqrt(2.0);
  return psi * psi.adjoint();
}

std::pair<SingleParticleState, SingleParticleState> theta_pair(double theta_deg, Complex overlap) {
  const auto [alpha, beta] = optics::spatial_amplitudes_from_theta(theta_deg);
  auto [pa, pb] = dist_pair_with_overlap(overlap);
  return {{alpha, Spin::Up, pa}, {beta, Spin::Down, pb}};
}

}  // namespace

TEST(Entanglement, balanced_state_is_half_triplet) {
  const auto [a, b] = theta_pair(22.5, 1.0);
  const auto rho = postselected_spin_state(a, b);
  EXPECT_NEAR((rho.matrix - 0.5 * bell()).cwiseAbs().maxCoeff(), 0.0, 1e-12);
  EXPECT_NEAR(rho.weight, 0.5, 1e-12);
}

TEST(Entanglement, orthogonal_dist_gives_diagonal_state) {
  const auto [a, b] = theta_pair(10.0, 0.0);
  const auto rho = postselected_spin_state(a, b);
  EXPECT_EQ(rho.matrix(1, 2), Complex(0.0));
  EXPECT_EQ(rho.matrix(2, 1), Complex(0.0));
  EXPECT_GT(rho.matrix(1, 1).real(), 0.0);
}

TEST(Entanglement, trace_matches_dense_reference) {
  Rng rng = make_rng(30);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + t % 3;
    const auto a = random_particle(rng, d, Spin::Up);
    const auto b = random_particle(rng, d, Spin::Down);
    const auto rho = postselected_spin_state(a, b);
    const auto ref = to_eigen(dense::dense_postselected_density(dense::dense_pair(a, b), d));
    EXPECT_NEAR((rho.matrix - ref).cwiseAbs().maxCoeff(), 0.0, 1e-12);
    EXPECT_NEAR(rho.weight, ref.trace().real(), 1e-12);
    EXPECT_LE(invariant_deviation(rho), 1e-12);
  }
}

TEST(Entanglement, trace_requires_postselection) {
  Rng rng = make_rng(31);
  const auto s = expand_in_detector_basis(random_particle(rng, 1, Spin::Up), random_particle(rng, 1, Spin::Down));
  try {
    trace_out_distinguishability(s);
    FAIL() << "expected NotPostSelected";
  } catch (const NotPostSelected& e) {
    EXPECT_NE(std::string(e.what()).find("post-select"), std::string::npos);
  }
}

TEST(Entanglement, wootters_examples) {
  EXPECT_NEAR(wootters_concurrence(bell()), 1.0, 1e-12);
  EXPECT_NEAR(wootters_concurrence(Eigen::Matrix4cd::Identity() / 4.0), 0.0, 1e-12);
  const double p = 0.5;
  const Eigen::Matrix4cd werner = p * bell() + (1.0 - p) * Eigen::Matrix4cd::Identity() / 4.0;
  EXPECT_NEAR(wootters_concurrence(werner), brute_wootters(werner), 1e-12);
  EXPECT_NEAR(wootters_concurrence(werner), std::max(0.0, (3.0 * p - 1.0) / 2.0), 1e-12);
}

TEST(Entanglement, wootters_matches_textbook_form) {
  Rng rng = make_rng(32);
  std::normal_distribution<double> n01;
  for (int t = 0; t < 100; ++t) {
    Eigen::Matrix4cd g;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) g(i, j) = Complex(n01(rng), n01(rng));
    }
    g.col(1) *= 0.3;
    g.col(2) *= 0.1;
    g.col(3) *= t % 2 == 0 ? 0.05 : 0.0;
    Eigen::Matrix4cd rho = g * g.adjoint();
    rho /= rho.trace();
    const double c = wootters_concurrence(rho);
    EXPECT_NEAR(c, brute_wootters(rho), 1e-9);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0 + 1e-12);
  }
}

TEST(Entanglement, normalized_needs_weight) {
  SpinDensityMatrix empty;
  EXPECT_THROW(wootters_concurrence(empty, Normalization::Normalized), NoPostSelectionSupport);
  EXPECT_EQ(wootters_concurrence(empty, Normalization::Raw), 0.0);
  try {
    wootters_concurrence(empty, Normalization::Normalized);
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("no post-selection support"), std::string::npos);
  }
}

TEST(Entanglement, closed_form_examples) {
  const double r = 1.0 / std::sqrt(2.0);
  const SpatialAmplitudes balanced{r, r};
  EXPECT_NEAR(concurrence_closed_form(balanced, balanced, 1.0), 1.0, 1e-12);
  EXPECT_EQ(concurrence_closed_form({0.6, 0.8}, {0.8, 0.6}, 0.0), 0.0);
  const auto [alpha, beta] = optics::spatial_amplitudes_from_theta(11.25);
  EXPECT_NEAR(concurrence_closed_form(alpha, beta, 1.0), std::pow(std::sin(M_PI / 4.0), 2), 1e-12);
  EXPECT_THROW(concurrence_closed_form(balanced, balanced, 1.0 + 1e-9), std::invalid_argument);
  EXPECT_NO_THROW(concurrence_closed_form(balanced, balanced, 1.0 + 1e-13));
}

TEST(Entanglement, closed_form_is_twice_raw_wootters) {
  Rng rng = make_rng(33);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_particle(rng, 1 + t % 3, Spin::Up);
    const auto b = random_particle(rng, 1 + t % 3, Spin::Down);
    const auto rho = postselected_spin_state(a, b);
    const Complex o = dist_inner(a.dist, b.dist);
    const double expected = 2.0 * std::abs(a.spatial.left * b.spatial.right * a.spatial.right * b.spatial.left) * std::norm(o);
    EXPECT_NEAR(wootters_concurrence(rho, Normalization::Raw), expected, 1e-9);
    EXPECT_NEAR(brute_wootters(rho.matrix), expected, 1e-9);
    EXPECT_NEAR(concurrence_closed_form(a.spatial, b.spatial, o), 2.0 * expected, 1e-9);
  }
}

TEST(Entanglement, balanced_normalized_concurrence_is_overlap_squared) {
  Rng rng = make_rng(34);
  for (int t = 0; t < 100; ++t) {
    const Complex o = random_overlap(rng);
    const auto [a, b] = theta_pair(22.5, o);
    EXPECT_NEAR(wootters_concurrence(postselected_spin_state(a, b), Normalization::Normalized), std::norm(o), 1e-9);
  }
}

TEST(Entanglement, degenerate_inputs_give_zero) {
  Rng rng = make_rng(35);
  for (int t = 0; t < 50; ++t) {
    auto a = random_particle(rng, 2, Spin::Up);
    auto b = random_particle(rng, 2, Spin::Down);
    (t % 2 == 0 ? a.spatial.left : b.spatial.right) = 0.0;
    a.spatial = SpatialAmplitudes::normalized(a.spatial.left, a.spatial.right);
    b.spatial = SpatialAmplitudes::normalized(b.spatial.left, b.spatial.right);
    EXPECT_NEAR(concurrence_closed_form(a.spatial, b.spatial, dist_inner(a.dist, b.dist)), 0.0, 1e-12);
    EXPECT_NEAR(wootters_concurrence(postselected_spin_state(a, b), Normalization::Raw), 0.0, 1e-12);
  }
}

TEST(Entanglement, monotone_in_both_factors) {
  Rng rng = make_rng(36);
  for (int t = 0; t < 50; ++t) {
    const auto alpha = random_spatial(rng), beta = random_spatial(rng);
    double prev = 0.0;
    for (int k = 0; k <= 50; ++k) {
      const double c = concurrence_closed_form(alpha, beta, k / 50.0);
      EXPECT_GE(c, prev);
      prev = c;
    }
  }
  const double o = 0.7;
  double prev = 0.0;
  for (double theta = 0.0; theta <= 22.5; theta += 0.5) {
    const auto [alpha, beta] = optics::spatial_amplitudes_from_theta(theta);
    const double c = concurrence_closed_form(alpha, beta, o);
    EXPECT_GE(c, prev - 1e-15);
    prev = c;
  }
}

TEST(Entanglement, particle_entanglement_examples) {
  NumberDistribution bell_only;
  bell_only.branches.push_back({1, 1, 1.0, SpinDensityMatrix::from_matrix(bell())});
  EXPECT_NEAR(entanglement_of_particles(bell_only), 1.0, 1e-12);
  NumberDistribution bunched;
  bunched.branches.push_back({2, 0, 0.5, std::nullopt});
  bunched.branches.push_back({0, 2, 0.5, std::nullopt});
  EXPECT_EQ(entanglement_of_particles(bunched), 0.0);
  NumberDistribution bad;
  bad.branches.push_back({2, 0, 0.7, std::nullopt});
  EXPECT_THROW(validate(bad), InvalidDistribution);
  bad.branches.push_back({0, 2, -0.3, std::nullopt});
  EXPECT_THROW(validate(bad), InvalidDistribution);
}

TEST(Entanglement, particle_entanglement_matches_dense_pipeline) {
  Rng rng = make_rng(37);
  const auto check = [](const SingleParticleState& a, const SingleParticleState& b) {
    const std::size_t d = a.dist.dim();
    const auto dense = dense::dense_pair(a, b);
    const auto rho = to_eigen(dense::dense_postselected_density(dense, d));
    const double p11 = rho.trace().real();
    const double branch = p11 > 0.0 ? brute_wootters(rho / p11) : 0.0;
    const auto dist = number_distribution(a, b);
    EXPECT_NO_THROW(validate(dist));
    EXPECT_NEAR(entanglement_of_particles(dist), p11 * branch, 1e-9);
    return entanglement_of_particles(dist);
  };
  const auto [a, b] = theta_pair(22.5, 1.0);
  EXPECT_NEAR(check(a, b), 0.5, 1e-9);
  for (int t = 0; t < 50; ++t) check(random_particle(rng, 1 + t % 3, Spin::Up), random_particle(rng, 1 + t % 3, Spin::Down));
}

TEST(Entanglement, particle_entanglement_bounded_by_closed_form) {
  Rng rng = make_rng(38);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_particle(rng, 2, Spin::Up);
    const auto b = random_particle(rng, 2, Spin::Down);
    const double ep = entanglement_of_particles(number_distribution(a, b));
    EXPECT_GE(ep, 0.0);
    EXPECT_LE(ep, 1.0);
    EXPECT_NEAR(ep, wootters_concurrence(postselected_spin_state(a, b), Normalization::Raw), 1e-9);
  }
}
