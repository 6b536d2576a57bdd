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

#include "bosent/gaussian_fit.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

#include "bosent/optics.hpp"
#include "bosent/sampling.hpp"

using namespace bosent;
using namespace bosent::optics;

namespace {

std::vector<CurvePoint> dip(double baseline, double visibility, double fwhm, double center = 0.0) {
  const double w = fwhm / kFwhmPerSigma;
  std::vector<CurvePoint> pts;
  for (double x = -300.0; x <= 300.0 + 1e-9; x += 10.0) {
    const double u = (x - center) / w;
    pts.push_back({x, baseline * (1.0 - visibility * std::exp(-0.5 * u * u))});
  }
  return pts;
}

}  // namespace

TEST(GaussianFit, recovers_noiseless_dips) {
  for (const auto [v, fwhm] : {std::pair{0.99, 132.0}, std::pair{0.91, 137.0}, std::pair{0.3, 80.0}}) {
    const auto fit = fit_gaussian_dip(dip(1000.0, v, fwhm, 3.0));
    EXPECT_NEAR(fit.visibility / v, 1.0, 1e-6);
    EXPECT_NEAR(fit.fwhm / fwhm, 1.0, 1e-6);
    EXPECT_NEAR(fit.baseline / 1000.0, 1.0, 1e-6);
    EXPECT_NEAR(fit.center, 3.0, 1e-6);
    EXPECT_LT(fit.residual, 1e-12);
    EXPECT_NEAR(fit.evaluate(3.0), 1000.0 * (1.0 - v), 1e-6);
  }
}

TEST(GaussianFit, residual_history_never_increases) {
  auto pts = dip(1000.0, 0.9, 130.0);
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i].y += (i % 3 == 0 ? 7.0 : -4.0);
  const auto fit = fit_gaussian_dip(pts);
  ASSERT_GE(fit.residual_history.size(), 2u);
  for (std::size_t i = 1; i < fit.residual_history.size(); ++i) {
    EXPECT_LE(fit.residual_history[i], fit.residual_history[i - 1]);
  }
  EXPECT_EQ(fit.residual_history.back(), fit.residual);
}

TEST(GaussianFit, flat_data_has_no_dip) {
  std::vector<CurvePoint> flat;
  for (int i = 0; i < 30; ++i) flat.push_back({static_cast<double>(i), 1000.0});
  try {
    fit_gaussian_dip(flat);
    FAIL() << "expected NoDipDetected";
  } catch (const NoDipDetected& e) {
    EXPECT_STREQ(e.what(), "no dip detected");
  }
}

TEST(GaussianFit, rejects_bad_input) {
  std::vector<CurvePoint> few{{0, 1}, {1, 0}, {2, 1}, {3, 1}};
  EXPECT_THROW(fit_gaussian_dip(few), std::invalid_argument);
  auto negative = dip(1000.0, 0.5, 100.0);
  negative[3].y = -1.0;
  EXPECT_THROW(fit_gaussian_dip(negative), std::invalid_argument);
}

TEST(GaussianFit, iteration_cap_returns_best) {
  auto pts = dip(1000.0, 0.8, 120.0, 10.0);
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i].y += (i % 2 == 0 ? 5.0 : -5.0);
  FitOptions opts;
  opts.max_iterations = 1;
  try {
    fit_gaussian_dip(pts, opts);
    FAIL() << "expected FitNotConverged";
  } catch (const FitNotConverged& e) {
    EXPECT_EQ(e.best().iterations, 1);
    EXPECT_GT(e.best().fwhm, 0.0);
    EXPECT_LE(e.best().residual, e.best().residual_history.front());
  }
}

TEST(GaussianFit, fits_peaks) {
  std::vector<CurvePoint> pts;
  const double sigma = 59.45;
  for (double x = -300.0; x <= 300.0; x += 15.0) pts.push_back({x, 0.8 * std::exp(-x * x / (2.0 * sigma * sigma))});
  const auto fit = fit_gaussian_peak(pts);
  EXPECT_NEAR(fit.fwhm, sigma * kFwhmPerSigma, 1e-6);
  EXPECT_NEAR(-fit.depth, 0.8, 1e-9);
  EXPECT_NEAR(fit.baseline, 0.0, 1e-9);
}

TEST(GaussianFit, error_models) {
  const auto clean = fit_gaussian_dip(dip(1000.0, 0.99, 132.0), {200, 1e-10, ErrorModel::Residual});
  EXPECT_LT(clean.fwhm_error, 1e-6);
  const auto poisson = fit_gaussian_dip(dip(1000.0, 0.99, 132.0));
  EXPECT_GT(poisson.fwhm_error, 0.5);
  EXPECT_LT(poisson.fwhm_error, 5.0);
  EXPECT_GT(poisson.visibility_error, 0.0);
}

TEST(GaussianFit, poisson_dips_recover_width) {
  const double v = 0.99, fwhm = 132.0;
  const auto truth = dip(1000.0, v, fwhm);
  int within = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng = make_rng(seed, 7);
    std::vector<CurvePoint> noisy;
    for (const auto& p : truth) {
      std::poisson_distribution<long> draw(std::max(p.y, 1e-12));
      noisy.push_back({p.x, static_cast<double>(draw(rng))});
    }
    const auto fit = fit_gaussian_dip(noisy);
    if (std::abs(fit.fwhm / fwhm - 1.0) <= 0.05) ++within;
  }
  EXPECT_GE(within, 95);
}

TEST(GaussianFit, sin2_fit) {
  std::vector<CurvePoint> pts;
  for (double t = 0.0; t <= 45.0; t += 2.5) pts.push_back({t, 0.7 * spatial_overlap_from_theta(t)});
  const auto fit = fit_sin2_4theta(pts);
  EXPECT_NEAR(fit.amplitude, 0.7, 1e-12);
  EXPECT_LT(fit.residual, 1e-12);
  EXPECT_THROW(fit_sin2_4theta(std::vector<CurvePoint>{{0.0, 1.0}}), std::invalid_argument);
}
