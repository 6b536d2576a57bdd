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

#include "bosent/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bosent/fq_oracle.hpp"

namespace bosent::optics {

double degrees_to_radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

void validate(const ExperimentParams& p) {
  if (!(p.sigma_um > 0.0)) throw std::invalid_argument("sigma_um must be > 0");
  if (!(p.shots >= 1.0)) throw std::invalid_argument("shots must be >= 1");
  if (p.runs < 1) throw std::invalid_argument("runs must be >= 1");
}

std::pair<SpatialAmplitudes, SpatialAmplitudes> spatial_amplitudes_from_theta(double theta_deg) {
  const double two_theta = 2.0 * degrees_to_radians(theta_deg);
  const double s = std::sin(two_theta);
  const double c = std::cos(two_theta);
  return {SpatialAmplitudes{s, c}, SpatialAmplitudes{c, s}};
}

double spatial_overlap_from_theta(double theta_deg) {
  const double s = std::sin(4.0 * degrees_to_radians(theta_deg));
  return s * s;
}

const char* to_string(OverlapConvention c) { return c == OverlapConvention::Paper ? "paper" : "quadrature"; }

OverlapConvention parse_overlap_convention(const std::string& name) {
  if (name == "paper") return OverlapConvention::Paper;
  if (name == "quadrature") return OverlapConvention::Quadrature;
  throw std::invalid_argument("unknown overlap convention '" + name + "' (expected paper or quadrature)");
}

Complex spectral_amplitude(double omega, double arrival, double delta) {
  const double norm = std::pow(2.0 * std::numbers::pi * delta * delta, -0.25);
  return norm * std::exp(Complex{-omega * omega / (4.0 * delta * delta), omega * arrival});
}

namespace {

// Trapezoid rule over ±12δ; the step resolves both the envelope and exp(iωl).
double integrate_overlap(double l, double delta) {
  const double half_width = 12.0 * delta;
  const double max_frequency = std::abs(l) + 10.0 / delta;
  const double step_limit = 2.0 * std::numbers::pi / max_frequency;
  const auto n = static_cast<long>(std::max(256.0, std::ceil(2.0 * half_width / step_limit) * 2.0));
  const double h = 2.0 * half_width / static_cast<double>(n);
  Complex sum{};
  for (long k = 0; k <= n; ++k) {
    const double omega = -half_width + h * static_cast<double>(k);
    const double w = (k == 0 || k == n) ? 0.5 : 1.0;
    sum += w * std::conj(spectral_amplitude(omega, 0.0, delta)) * spectral_amplitude(omega, l, delta);
  }
  return (h * sum).real();
}

}  // namespace

double gaussian_overlap(double l_um, OverlapConvention convention, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("spectral width delta must be > 0");
  if (convention == OverlapConvention::Paper) return std::exp(-2.0 * delta * delta * l_um * l_um);
  return std::clamp(integrate_overlap(l_um, delta), 0.0, 1.0);
}

double matched_delta(double sigma_um, OverlapConvention convention) {
  if (!(sigma_um > 0.0)) throw std::invalid_argument("sigma_um must be > 0");
  // |o|^2 = exp(-4δ²l²) (paper) or exp(-δ²l²) (quadrature) against exp(-l²/2σ²).
  return convention == OverlapConvention::Paper ? 1.0 / (2.0 * std::sqrt(2.0) * sigma_um)
                                                : 1.0 / (std::sqrt(2.0) * sigma_um);
}

double concurrence_optical(double theta_deg, double l_um, double sigma_um) {
  if (!(sigma_um > 0.0)) throw std::invalid_argument("sigma_um must be > 0");
  return spatial_overlap_from_theta(theta_deg) * std::exp(-l_um * l_um / (2.0 * sigma_um * sigma_um));
}

double hom_visibility_model(double theta_deg, Mode detector) {
  const auto [alphas, betas] = spatial_amplitudes_from_theta(theta_deg);
  const double r = 1.0 / std::sqrt(2.0);
  const Eigen::Vector2cd plus{r, r};
  const Eigen::Vector2cd minus{r, -r};
  const auto coincidences = [&](double overlap) {
    auto [phi_a, phi_b] = dist_pair_with_overlap(overlap);
    const SingleParticleState a{alphas, Spin::Up, std::move(phi_a)};
    const SingleParticleState b{betas, Spin::Down, std::move(phi_b)};
    return oracle::coincidence_probability(oracle::symmetrize(a, b), detector, plus, minus);
  };
  const double distinguishable = coincidences(0.0);
  if (distinguishable <= kExactTolerance) return 0.0;
  return 1.0 - coincidences(1.0) / distinguishable;
}

double hom_coincidence(double theta_deg, double overlap, double baseline) {
  if (!(overlap >= 0.0 && overlap <= 1.0)) throw std::invalid_argument("HOM overlap must lie in [0, 1]");
  if (!(baseline > 0.0)) throw std::invalid_argument("HOM baseline must be > 0");
  return baseline * (1.0 - hom_visibility_model(theta_deg) * overlap * overlap);
}

CountTable simulate_counts(const ExperimentParams& params, std::span<const double> delays_um,
                           const TruthCurve& truth, std::uint64_t stream) {
  Rng rng = make_rng(params.seed, stream);
  return simulate_counts(params, delays_um, truth, rng);
}

CountTable simulate_counts(const ExperimentParams& params, std::span<const double> delays_um,
                           const TruthCurve& truth, Rng& rng) {
  validate(params);
  CountTable table;
  table.delays_um.assign(delays_um.begin(), delays_um.end());
  table.expected.reserve(delays_um.size());
  table.counts.reserve(delays_um.size());
  for (double l : delays_um) {
    const double rate = truth(l);
    if (!(rate >= 0.0)) {
      std::ostringstream out;
      out << "truth curve returned a negative rate " << rate << " at delay " << l << " um";
      throw std::invalid_argument(out.str());
    }
    const double mean = rate * params.shots;
    table.expected.push_back(mean);
    if (mean == 0.0) {
      table.counts.push_back(0);
    } else {
      std::poisson_distribution<std::uint64_t> poisson(mean);
      table.counts.push_back(poisson(rng));
    }
  }
  return table;
}

McRunError::McRunError(int run, const std::string& what)
    : std::runtime_error("Monte Carlo run " + std::to_string(run) + " failed: " + what), run_(run) {}

McSummary summarize_samples(std::vector<double> samples) {
  McSummary s;
  s.samples = std::move(samples);
  const auto n = static_cast<double>(s.samples.size());
  if (s.samples.empty()) return s;
  double sum = 0.0;
  for (double x : s.samples) sum += x;
  s.mean = sum / n;
  if (s.samples.size() < 2) return s;
  double ss = 0.0;
  for (double x : s.samples) ss += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(ss / (n - 1.0));
  return s;
}

McSummary monte_carlo(std::uint64_t seed, int runs, const std::function<double(Rng&)>& estimator) {
  if (runs < 2) throw std::invalid_argument("Monte Carlo error bars need runs >= 2");
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(runs));
  for (int r = 0; r < runs; ++r) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(r) + 1);
    try {
      samples.push_back(estimator(rng));
    } catch (const std::exception& e) {
      throw McRunError(r, e.what());
    }
  }
  return summarize_samples(std::move(samples));
}

McSummary monte_carlo_errorbars(const ExperimentParams& params, std::span<const double> delays_um,
                                const TruthCurve& truth, const std::function<double(const CountTable&)>& estimator) {
  validate(params);
  return monte_carlo(params.seed, params.runs,
                     [&](Rng& rng) { return estimator(simulate_counts(params, delays_um, truth, rng)); });
}

}  // namespace bosent::optics
