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

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bosent::optics {

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
};

/// How standard errors are derived from the fit.
enum class ErrorModel {
  /// Poisson counts: var(y_i) = model(x_i), sandwich covariance.
  Poisson,
  /// Homoscedastic noise estimated from the residual sum of squares.
  Residual,
};

/// Result of fitting y = baseline - depth · exp(-(x - center)^2 / (2 w^2)).
/// A peak has negative depth.
struct GaussianFit {
  double baseline = 0.0;
  double depth = 0.0;
  double center = 0.0;
  double width = 0.0;
  double fwhm = 0.0;
  double visibility = 0.0;
  /// Residual sum of squares at the optimum.
  double residual = 0.0;
  int iterations = 0;
  /// Residual sum of squares after initialization and each accepted step.
  std::vector<double> residual_history;

  double baseline_error = 0.0;
  double depth_error = 0.0;
  double center_error = 0.0;
  double fwhm_error = 0.0;
  double visibility_error = 0.0;

  double evaluate(double x) const;
};

class NoDipDetected : public std::runtime_error {
 public:
  NoDipDetected() : std::runtime_error("no dip detected") {}
};

/// Iteration cap reached; `best` holds the parameters with the lowest residual.
class FitNotConverged : public std::runtime_error {
 public:
  explicit FitNotConverged(GaussianFit best);
  const GaussianFit& best() const { return best_; }

 private:
  GaussianFit best_;
};

struct FitOptions {
  int max_iterations = 200;
  double step_tolerance = 1e-10;
  ErrorModel errors = ErrorModel::Poisson;
};

/// Damped Gauss-Newton fit of a Gaussian dip. Needs >= 5 points.
/// Throws NoDipDetected on flat data, FitNotConverged at the iteration cap.
GaussianFit fit_gaussian_dip(std::span<const CurvePoint> points, const FitOptions& options = {});

/// Same model for an upward peak (reported with negative depth).
GaussianFit fit_gaussian_peak(std::span<const CurvePoint> points, const FitOptions& options = {});

/// Least-squares amplitude of y = amplitude · sin^2(4θ), θ in degrees.
struct Sin2Fit {
  double amplitude = 0.0;
  /// Root-mean-square residual.
  double residual = 0.0;
};
Sin2Fit fit_sin2_4theta(std::span<const CurvePoint> points);

}  // namespace bosent::optics
