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

#include "bosent/nolabel_algebra.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "bosent/optics.hpp"
#include "bosent/sampling.hpp"
#include "unit/brute_force.hpp"

using namespace bosent;

namespace {

SingleParticleState ket(Mode m, Spin s, std::size_t d = 1, std::size_t a = 0) {
  return {SpatialAmplitudes::at(m), s, DistVector::basis(d, a)};
}

SymmetricTwoBosonState single_term(const SingleParticleState& a, const SingleParticleState& b) {
  SymmetricTwoBosonState s;
  s.add(1.0, a, b);
  return s;
}

}  // namespace

TEST(NoLabel, transition_of_bunched_pair_is_two) {
  Rng rng = make_rng(20);
  const auto a = random_particle(rng, 2);
  EXPECT_NEAR(std::abs(transition_two({a, a}, {a, a}) - 2.0), 0.0, 1e-12);
}

TEST(NoLabel, transition_of_matched_orthogonal_pairs_is_one) {
  const auto a = ket(Mode::Left, Spin::Up), b = ket(Mode::Right, Spin::Down);
  EXPECT_EQ(transition_two({a, b}, {a, b}), Complex(1.0));
  EXPECT_EQ(transition_two({b, a}, {a, b}), Complex(1.0));
}

TEST(NoLabel, transition_matches_dense_tensors) {
  Rng rng = make_rng(21);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + t % 3;
    const auto a = random_particle(rng, d), b = random_particle(rng, d);
    const auto c = random_particle(rng, d), e = random_particle(rng, d);
    const Complex dense = dense::dense_inner(dense::dense_pair(c, e), dense::dense_pair(a, b));
    EXPECT_NEAR(std::abs(transition_two({c, e}, {a, b}) - dense), 0.0, 1e-12);
  }
}

TEST(NoLabel, norm_is_real_and_nonnegative) {
  Rng rng = make_rng(22);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_particle(rng, 1 + t % 3), b = random_particle(rng, 1 + t % 3);
    const Complex n = transition_two({a, b}, {a, b});
    EXPECT_NEAR(n.imag(), 0.0, 1e-12);
    EXPECT_GE(n.real(), 1.0 - 1e-12);
  }
}

TEST(NoLabel, project_single_examples) {
  const auto a = ket(Mode::Left, Spin::Up), b = ket(Mode::Right, Spin::Up);
  const auto r = project_single(a, {a, b});
  ASSERT_EQ(r.terms.size(), 1u);
  EXPECT_NEAR(std::abs(r.terms[0].first - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_EQ(r.terms[0].second, b);
  EXPECT_TRUE(project_single(ket(Mode::Left, Spin::Down), {a, b}).empty());
}

TEST(NoLabel, project_single_factorizes_transition) {
  Rng rng = make_rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + t % 3;
    const auto a = random_particle(rng, d), b = random_particle(rng, d);
    const auto c = random_particle(rng, d), e = random_particle(rng, d);
    const Complex dense = dense::dense_inner(dense::dense_pair(c, e), dense::dense_pair(a, b));
    EXPECT_NEAR(std::abs(project_single(c, {a, b}).contract(e) - dense / std::sqrt(2.0)), 0.0, 1e-12);
  }
}

TEST(NoLabel, add_is_canonical) {
  const auto a = ket(Mode::Left, Spin::Up), b = ket(Mode::Right, Spin::Down);
  SymmetricTwoBosonState x, y;
  x.add(0.5, a, b);
  x.add(0.5, b, a);
  y.add(1.0, b, a);
  EXPECT_EQ(x, y);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x.terms()[0].pair.first, a);
  x.add(-1.0, a, b);
  EXPECT_TRUE(x.empty());
}

TEST(NoLabel, expansion_with_both_left) {
  const SingleParticleState a{{1.0, 0.0}, Spin::Up, DistVector{{1.0}}};
  const SingleParticleState b{{1.0, 0.0}, Spin::Down, DistVector{{1.0}}};
  const auto s = expand_in_detector_basis(a, b);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.terms()[0].coefficient, Complex(1.0));
  EXPECT_EQ(s, single_term(ket(Mode::Left, Spin::Up), ket(Mode::Left, Spin::Down)));
}

TEST(NoLabel, expansion_at_balanced_angle) {
  const auto [alpha, beta] = optics::spatial_amplitudes_from_theta(22.5);
  const auto s = expand_in_detector_basis({alpha, Spin::Up, DistVector{{1.0}}}, {beta, Spin::Down, DistVector{{1.0}}});
  ASSERT_EQ(s.size(), 4u);
  for (const auto& t : s.terms()) EXPECT_NEAR(std::abs(t.coefficient - 0.5), 0.0, 1e-15);
}

TEST(NoLabel, expansion_equals_symmetrized_state) {
  Rng rng = make_rng(24);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + t % 3;
    const auto a = random_particle(rng, d, Spin::Up);
    const auto b = random_particle(rng, d, Spin::Down);
    const auto s = expand_in_detector_basis(a, b);
    const auto dense_ab = dense::dense_pair(a, b);
    // Overlap with a few random probe pairs pins the state down.
    for (int k = 0; k < 3; ++k) {
      const auto c = random_particle(rng, d), e = random_particle(rng, d);
      const Complex expected = dense::dense_inner(dense::dense_pair(c, e), dense_ab);
      EXPECT_NEAR(std::abs(inner(single_term(c, e), s) - expected), 0.0, 1e-12);
    }
    EXPECT_NEAR(inner(s, s).real(), dense::dense_inner(dense_ab, dense_ab).real(), 1e-12);
  }
}

TEST(NoLabel, expansion_rejects_wrong_spins) {
  Rng rng = make_rng(25);
  const auto a = random_particle(rng, 1, Spin::Up);
  try {
    expand_in_detector_basis(a, a);
    FAIL() << "expected UnsupportedConfiguration";
  } catch (const UnsupportedConfiguration& e) {
    EXPECT_NE(std::string(e.what()).find("(up, up)"), std::string::npos);
  }
}

TEST(NoLabel, postselection_keeps_middle_terms) {
  const SpatialAmplitudes alpha{0.6, 0.8}, beta{Complex(0.0, 0.28), 0.96};
  const auto [pa, pb] = dist_pair_with_overlap(Complex(0.3, 0.1));
  const auto s = postselect_one_per_detector(expand_in_detector_basis({alpha, Spin::Up, pa}, {beta, Spin::Down, pb}));
  ASSERT_EQ(s.size(), 2u);
  for (const auto& t : s.terms()) {
    ASSERT_EQ(detector_mode(t.pair.first.spatial), Mode::Left);
    ASSERT_EQ(detector_mode(t.pair.second.spatial), Mode::Right);
    const Complex expected =
        t.pair.first.spin == Spin::Up ? alpha.left * beta.right : alpha.right * beta.left;
    EXPECT_NEAR(std::abs(t.coefficient - expected), 0.0, 1e-15);
  }
}

TEST(NoLabel, postselection_of_bunched_input_is_empty) {
  const SpatialAmplitudes left{1.0, 0.0};
  const auto s = expand_in_detector_basis({left, Spin::Up, DistVector{{1.0}}}, {left, Spin::Down, DistVector{{1.0}}});
  EXPECT_TRUE(postselect_one_per_detector(s).empty());
}

TEST(NoLabel, postselection_is_idempotent) {
  Rng rng = make_rng(26);
  for (int t = 0; t < 50; ++t) {
    const auto once = postselect_one_per_detector(
        expand_in_detector_basis(random_particle(rng, 2, Spin::Up), random_particle(rng, 2, Spin::Down)));
    EXPECT_EQ(postselect_one_per_detector(once), once);
  }
}

TEST(NoLabel, postselection_rejects_non_detector_kets) {
  Rng rng = make_rng(27);
  SymmetricTwoBosonState s;
  s.add(1.0, random_particle(rng, 1), random_particle(rng, 1));
  EXPECT_THROW(postselect_one_per_detector(s), std::invalid_argument);
}
