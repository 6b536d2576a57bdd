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

#include "bosent/fq_oracle.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "bosent/optics.hpp"
#include "bosent/sampling.hpp"
#include "unit/brute_force.hpp"

using namespace bosent;
using namespace bosent::oracle;

namespace {

SingleParticleState at_left(Spin s, std::size_t d, std::size_t a) { return {{1.0, 0.0}, s, DistVector::basis(d, a)}; }

std::pair<SingleParticleState, SingleParticleState> theta_pair(double theta_deg, Complex overlap) {
  const auto [alpha, beta] = optics::spatial_amplitudes_from_theta(theta_deg);
  auto [pa, pb] = dist_pair_with_overlap(overlap);
  return {{alpha, Spin::Up, pa}, {beta, Spin::Down, pb}};
}

}  // namespace

TEST(FqOracle, slot_vector_matches_dense_ket) {
  Rng rng = make_rng(10);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 1 + t % 3;
    const auto p = random_particle(rng, d);
    const auto q = random_particle(rng, d);
    EXPECT_NEAR(std::abs(slot_vector(p).dot(slot_vector(q)) -
                         dense::dense_inner(dense::dense_ket(p), dense::dense_ket(q))),
                0.0, 1e-12);
  }
}

TEST(FqOracle, identical_inputs_bunch) {
  Rng rng = make_rng(11);
  const auto s = random_particle(rng, 2);
  const LabeledState sym = symmetrize(s, s);
  const LabeledState product = LabeledState::product(slot_vector(s), slot_vector(s));
  EXPECT_NEAR((sym.amplitudes() - std::sqrt(2.0) * product.amplitudes()).cwiseAbs().maxCoeff(), 0.0, 1e-15);
  EXPECT_NEAR(sym.norm_squared(), 2.0, 1e-12);
}

TEST(FqOracle, orthogonal_inputs_have_unit_norm) {
  EXPECT_NEAR(symmetrize(at_left(Spin::Up, 1, 0), at_left(Spin::Down, 1, 0)).norm_squared(), 1.0, 1e-15);
}

TEST(FqOracle, symmetrized_norm_law) {
  Rng rng = make_rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + t % 3;
    const auto a = random_particle(rng, d);
    const auto b = random_particle(rng, d);
    const auto dense = dense::dense_pair(a, b);
    double dense_norm = 0.0;
    for (const auto& x : dense) dense_norm += std::norm(x);
    const double n = symmetrize(a, b).norm_squared();
    EXPECT_NEAR(n, dense_norm, 1e-12);
    EXPECT_NEAR(n, 1.0 + std::norm(inner_single(a, b)), 1e-12);
  }
}

TEST(FqOracle, symmetrize_is_exchange_invariant) {
  Rng rng = make_rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_particle(rng, 2);
    const auto b = random_particle(rng, 2);
    const auto ab = symmetrize(a, b);
    EXPECT_EQ(ab.amplitudes(), symmetrize(b, a).amplitudes());
    EXPECT_EQ(ab.amplitudes(), ab.swapped().amplitudes());
  }
}

TEST(FqOracle, symmetrize_dimension_mismatch) {
  EXPECT_THROW(symmetrize(at_left(Spin::Up, 1, 0), at_left(Spin::Up, 2, 0)), DimensionMismatch);
  EXPECT_THROW(labeled_inner(LabeledState(1), LabeledState(2)), DimensionMismatch);
}

TEST(FqOracle, labeled_inner_examples) {
  const auto p = at_left(Spin::Up, 2, 0);
  const auto q = at_left(Spin::Up, 2, 1);
  EXPECT_NEAR(std::abs(labeled_inner(symmetrize(p, q), symmetrize(p, q)) - 1.0), 0.0, 1e-15);
  const auto r = at_left(Spin::Down, 2, 0);
  const auto s = at_left(Spin::Down, 2, 1);
  EXPECT_EQ(labeled_inner(symmetrize(p, q), symmetrize(r, s)), Complex(0.0));
}

TEST(FqOracle, labeled_inner_reproduces_transition_relation) {
  Rng rng = make_rng(14);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + t % 3;
    const auto a = random_particle(rng, d), b = random_particle(rng, d);
    const auto c = random_particle(rng, d), e = random_particle(rng, d);
    const Complex expected = inner_single(c, a) * inner_single(e, b) + inner_single(c, b) * inner_single(e, a);
    const Complex dense = dense::dense_inner(dense::dense_pair(c, e), dense::dense_pair(a, b));
    const Complex got = labeled_inner(symmetrize(c, e), symmetrize(a, b));
    EXPECT_NEAR(std::abs(got - expected), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(got - dense), 0.0, 1e-12);
  }
}

TEST(FqOracle, postselected_density_with_both_left_is_zero) {
  const auto rho = oracle_postselected_density(symmetrize(at_left(Spin::Up, 1, 0), at_left(Spin::Down, 1, 0)));
  EXPECT_EQ(rho.weight, 0.0);
  EXPECT_EQ(rho.matrix, Eigen::Matrix4cd::Zero());
}

TEST(FqOracle, postselected_density_at_balanced_point_is_triplet) {
  const auto [a, b] = theta_pair(22.5, 1.0);
  const auto rho = oracle_postselected_density(symmetrize(a, b));
  Eigen::Vector4cd psi(0.0, 1.0, 1.0, 0.0);
  psi /= std::sqrt(2.0);
  const Eigen::Matrix4cd expected = 0.5 * psi * psi.adjoint();
  EXPECT_NEAR((rho.matrix - expected).cwiseAbs().maxCoeff(), 0.0, 1e-12);
  EXPECT_NEAR(rho.weight, 0.5, 1e-12);
}

TEST(FqOracle, orthogonal_dist_kills_coherence) {
  const auto [a, b] = theta_pair(17.0, 0.0);
  const auto rho = oracle_postselected_density(symmetrize(a, b));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) EXPECT_NEAR(std::abs(rho.matrix(i, j)), 0.0, 1e-15);
    }
  }
  EXPECT_GT(rho.weight, 0.0);
}

TEST(FqOracle, postselected_density_matches_dense_reference) {
  Rng rng = make_rng(15);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + t % 3;
    const auto a = random_particle(rng, d);
    const auto b = random_particle(rng, d);
    const auto rho = oracle_postselected_density(symmetrize(a, b));
    const auto ref = dense::dense_postselected_density(dense::dense_pair(a, b), d);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(rho.matrix(i, j) - ref[i][j]), 0.0, 1e-12);
    }
  }
}

TEST(FqOracle, number_weights_sum_to_one) {
  Rng rng = make_rng(16);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_particle(rng, 2);
    const auto b = random_particle(rng, 2);
    const auto w = number_weights(symmetrize(a, b));
    EXPECT_NEAR(w.both_left + w.one_each + w.both_right, 1.0, 1e-12);
    EXPECT_GE(w.both_left, 0.0);
    EXPECT_GE(w.both_right, 0.0);
  }
}

TEST(FqOracle, coincidence_probability_of_single_mode_pair) {
  // |H>|V> both in R: a diagonal-basis analyzer sees them in different ports half the time.
  const SingleParticleState h{{0.0, 1.0}, Spin::Down, DistVector{{1.0}}};
  const SingleParticleState v{{0.0, 1.0}, Spin::Up, DistVector{{1.0}}};
  const double r = 1.0 / std::sqrt(2.0);
  const Eigen::Vector2cd plus(r, r), minus(r, -r);
  EXPECT_NEAR(coincidence_probability(symmetrize(v, h), Mode::Right, plus, minus), 0.0, 1e-15);
  const SingleParticleState h2{{0.0, 1.0}, Spin::Down, DistVector::basis(2, 1)};
  const SingleParticleState v2{{0.0, 1.0}, Spin::Up, DistVector::basis(2, 0)};
  EXPECT_NEAR(coincidence_probability(symmetrize(v2, h2), Mode::Right, plus, minus), 0.5, 1e-15);
  EXPECT_NEAR(coincidence_probability(symmetrize(v2, h2), Mode::Left, plus, minus), 0.0, 1e-15);
}
