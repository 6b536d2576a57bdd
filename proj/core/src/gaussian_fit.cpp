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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bosent/optics.hpp"

namespace bosent::optics {

namespace {

enum class Polarity { Dip, Peak };

using Params = Eigen::Vector4d;  // baseline, depth, center, width

double model(const Params& p, double x) {
  const double u = (x - p(2)) / p(3);
  return p(0) - p(1) * std::exp(-0.5 * u * u);
}

Eigen::MatrixXd jacobian(const Params& p, std::span<const CurvePoint> points) {
  Eigen::MatrixXd j(static_cast<Eigen::Index>(points.size()), 4);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double dx = points[i].x - p(2);
    const double w = p(3);
    const double g = std::exp(-0.5 * dx * dx / (w * w));
    const auto r = static_cast<Eigen::Index>(i);
    j(r, 0) = 1.0;
    j(r, 1) = -g;
    j(r, 2) = -p(1) * g * dx / (w * w);
    j(r, 3) = -p(1) * g * dx * dx / (w * w * w);
  }
  return j;
}

double rss(const Params& p, std::span<const CurvePoint> points) {
  double total = 0.0;
  for (const auto& pt : points) {
    const double r = pt.y - model(p, pt.x);
    total += r * r;
  }
  return total;
}

double crossing(const CurvePoint& inside, const CurvePoint& outside, double level) {
  const double dy = outside.y - inside.y;
  if (dy == 0.0) return outside.x;
  return inside.x + (level - inside.y) * (outside.x - inside.x) / dy;
}

// Initial guess from the data shape, in dip orientation (sign-flipped for peaks).
Params initial_guess(std::span<const CurvePoint> sorted) {
  const std::size_t n = sorted.size();
  const std::size_t edge = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.1 * static_cast<double>(n))));
  double outer_sum = 0.0;
  std::vector<double> outer;
  for (std::size_t i = 0; i < edge; ++i) {
    outer.push_back(sorted[i].y);
    outer.push_back(sorted[n - 1 - i].y);
  }
  outer_sum = std::accumulate(outer.begin(), outer.end(), 0.0);
  const double baseline = outer_sum / static_cast<double>(outer.size());
  double spread = 0.0;
  for (double y : outer) spread += (y - baseline) * (y - baseline);
  spread = outer.size() > 2 ? std::sqrt(spread / static_cast<double>(outer.size() - 1)) : 0.0;

  const auto lowest = std::min_element(sorted.begin(), sorted.end(),
                                       [](const CurvePoint& a, const CurvePoint& b) { return a.y < b.y; });
  const double depth = baseline - lowest->y;
  const double scale = std::max(1.0, std::abs(baseline));
  if (!(depth > 1e-9 * scale) || depth <= 5.0 * spread) throw NoDipDetected();

  const auto k = static_cast<std::size_t>(lowest - sorted.begin());
  const double half = baseline - 0.5 * depth;
  double left = sorted.front().x;
  double right = sorted.back().x;
  for (std::size_t i = k; i-- > 0;) {
    if (sorted[i].y >= half) {
      left = crossing(sorted[i + 1], sorted[i], half);
      break;
    }
  }
  for (std::size_t i = k + 1; i < n; ++i) {
    if (sorted[i].y >= half) {
      right = crossing(sorted[i - 1], sorted[i], half);
      break;
    }
  }
  double width = (right - left) / kFwhmPerSigma;
  if (!(width > 0.0)) width = (sorted.back().x - sorted.front().x) / 4.0;
  return {baseline, depth, lowest->x, width};
}

GaussianFit summarize(const Params& p, std::span<const CurvePoint> points, ErrorModel errors) {
  GaussianFit fit;
  fit.baseline = p(0);
  fit.depth = p(1);
  fit.center = p(2);
  fit.width = std::abs(p(3));
  fit.fwhm = kFwhmPerSigma * fit.width;
  fit.visibility = p(0) != 0.0 ? p(1) / p(0) : 0.0;
  fit.residual = rss(p, points);

  const Eigen::MatrixXd j = jacobian(p, points);
  const Eigen::Matrix4d jtj = j.transpose() * j;
  const Eigen::FullPivLU<Eigen::Matrix4d> lu(jtj);
  if (!lu.isInvertible()) return fit;
  const Eigen::Matrix4d inv = lu.inverse();
  Eigen::Matrix4d cov;
  if (errors == ErrorModel::Poisson) {
    Eigen::VectorXd var(static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) var(static_cast<Eigen::Index>(i)) = std::max(model(p, points[i].x), 1.0);
    const Eigen::Matrix4d meat = j.transpose() * var.asDiagonal() * j;
    cov = inv * meat * inv;
  } else {
    const double dof = static_cast<double>(points.size()) - 4.0;
    cov = (dof > 0.0 ? fit.residual / dof : 0.0) * inv;
  }
  fit.baseline_error = std::sqrt(std::max(0.0, cov(0, 0)));
  fit.depth_error = std::sqrt(std::max(0.0, cov(1, 1)));
  fit.center_error = std::sqrt(std::max(0.0, cov(2, 2)));
  fit.fwhm_error = kFwhmPerSigma * std::sqrt(std::max(0.0, cov(3, 3)));
  if (p(0) != 0.0) {
    // Delta method for depth / baseline.
    const Eigen::Vector4d g{-p(1) / (p(0) * p(0)), 1.0 / p(0), 0.0, 0.0};
    fit.visibility_error = std::sqrt(std::max(0.0, g.dot(cov * g)));
  }
  return fit;
}

GaussianFit fit_profile(std::span<const CurvePoint> input, const FitOptions& options, Polarity polarity) {
  if (input.size() < 5) throw std::invalid_argument("Gaussian fit needs at least 5 points");
  std::vector<CurvePoint> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end(), [](const CurvePoint& a, const CurvePoint& b) { return a.x < b.x; });

  Params p;
  if (polarity == Polarity::Dip) {
    p = initial_guess(pts);
  } else {
    std::vector<CurvePoint> flipped = pts;
    for (auto& q : flipped) q.y = -q.y;
    p = initial_guess(flipped);
    p(0) = -p(0);
    p(1) = -p(1);
  }

  double current = rss(p, pts);
  std::vector<double> history{current};
  double lambda = 1e-3;
  int iterations = 0;
  bool converged = current == 0.0;
  while (!converged && iterations < options.max_iterations) {
    ++iterations;
    const Eigen::MatrixXd j = jacobian(p, pts);
    Eigen::VectorXd r(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) r(static_cast<Eigen::Index>(i)) = pts[i].y - model(p, pts[i].x);
    const Eigen::Matrix4d jtj = j.transpose() * j;
    const Eigen::Vector4d g = j.transpose() * r;

    bool accepted = false;
    while (!accepted && lambda < 1e16) {
      Eigen::Matrix4d damped = jtj;
      damped.diagonal() *= 1.0 + lambda;
      const Eigen::Vector4d step = damped.ldlt().solve(g);
      const Params trial = p + step;
      const double trial_rss = trial(3) != 0.0 ? rss(trial, pts) : current;
      if (std::isfinite(trial_rss) && trial_rss < current) {
        const double rel = (step.cwiseAbs().array() / (p.cwiseAbs().array() + 1e-300)).maxCoeff();
        p = trial;
        current = trial_rss;
        history.push_back(current);
        lambda = std::max(lambda * 0.1, 1e-12);
        accepted = true;
        converged = rel < options.step_tolerance || current == 0.0;
      } else {
        lambda *= 10.0;
      }
    }
    if (!accepted) converged = true;
  }

  GaussianFit fit = summarize(p, pts, options.errors);
  fit.iterations = iterations;
  fit.residual_history = std::move(history);
  if (!converged) throw FitNotConverged(std::move(fit));
  return fit;
}

}  // namespace

double GaussianFit::evaluate(double x) const {
  const double u = (x - center) / width;
  return baseline - depth * std::exp(-0.5 * u * u);
}

FitNotConverged::FitNotConverged(GaussianFit best)
    : std::runtime_error("Gaussian fit did not converge within the iteration cap"), best_(std::move(best)) {}

GaussianFit fit_gaussian_dip(std::span<const CurvePoint> points, const FitOptions& options) {
  for (const auto& p : points) {
    if (p.y < 0.0) throw std::invalid_argument("dip fit expects non-negative counts");
  }
  return fit_profile(points, options, Polarity::Dip);
}

GaussianFit fit_gaussian_peak(std::span<const CurvePoint> points, const FitOptions& options) {
  return fit_profile(points, options, Polarity::Peak);
}

Sin2Fit fit_sin2_4theta(std::span<const CurvePoint> points) {
  if (points.empty()) throw std::invalid_argument("sin^2(4θ) fit needs at least one point");
  double sy = 0.0, ss = 0.0;
  for (const auto& p : points) {
    const double s = spatial_overlap_from_theta(p.x);
    sy += s * p.y;
    ss += s * s;
  }
  if (ss == 0.0) throw std::invalid_argument("sin^2(4θ) vanishes at every sample angle");
  Sin2Fit fit;
  fit.amplitude = sy / ss;
  double sq = 0.0;
  for (const auto& p : points) {
    const double r = p.y - fit.amplitude * spatial_overlap_from_theta(p.x);
    sq += r * r;
  }
  fit.residual = std::sqrt(sq / static_cast<double>(points.size()));
  return fit;
}

}  // namespace bosent::optics
