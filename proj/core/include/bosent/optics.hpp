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

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bosent/core_state.hpp"
#include "bosent/sampling.hpp"

namespace bosent::optics {

/// 2√(2 ln 2): FWHM of a Gaussian in units of its standard deviation.
inline const double kFwhmPerSigma = 2.0 * std::sqrt(2.0 * std::log(2.0));

/// Width of the concurrence-vs-delay curve matching a 140 µm FWHM.
inline constexpr double kDefaultSigmaUm = 59.45;

double degrees_to_radians(double degrees);

/// Knobs of one simulated measurement. Delays and widths are in µm, angles in degrees.
struct ExperimentParams {
  double theta_deg = 22.5;
  double delay_um = 0.0;
  double sigma_um = kDefaultSigmaUm;
  double shots = 1000.0;
  std::uint64_t seed = 0;
  int runs = 100;
};

/// Throws std::invalid_argument unless sigma_um > 0, shots >= 1 and runs >= 1.
void validate(const ExperimentParams& p);

/// Amplitudes after the first beam displacer for input polarization
/// cos2θ|H> + sin2θ|V>: alpha = (L: sin2θ, R: cos2θ), beta = (L: cos2θ, R: sin2θ).
std::pair<SpatialAmplitudes, SpatialAmplitudes> spatial_amplitudes_from_theta(double theta_deg);

/// sin^2(4θ), the spatial-overlap factor under the θ parameterization.
double spatial_overlap_from_theta(double theta_deg);

enum class OverlapConvention {
  /// exp(-2 δ^2 l^2), the closed form quoted for the Gaussian wavepackets.
  Paper,
  /// Direct numerical integration of the two spectral amplitudes, exp(-δ^2 l^2 / 2).
  Quadrature,
};

const char* to_string(OverlapConvention c);
OverlapConvention parse_overlap_convention(const std::string& name);

/// Spectral amplitude (2π δ^2)^(-1/4) exp(i ω t - ω^2 / (4 δ^2)).
Complex spectral_amplitude(double omega, double arrival, double delta);

/// <phi_A|phi_B> for two wavepackets separated by delay l. Requires delta > 0.
double gaussian_overlap(double l_um, OverlapConvention convention, double delta);

/// δ for which |gaussian_overlap|^2 is a Gaussian in l with standard deviation sigma_um.
double matched_delta(double sigma_um, OverlapConvention convention);

/// C = sin^2(4θ) exp(-l^2 / (2 σ^2)).
double concurrence_optical(double theta_deg, double l_um, double sigma_um);

/// Two-photon interference visibility of the merge at `detector` for the
/// θ-prepared input, computed on the labeled-tensor reference by comparing the
/// cross-polarized (diagonal basis) coincidence probability of indistinguishable
/// and fully distinguishable photons. Zero if the photons never meet there.
double hom_visibility_model(double theta_deg, Mode detector = Mode::Right);

/// baseline · (1 - V_model(θ) · overlap^2). overlap in [0, 1], baseline > 0.
double hom_coincidence(double theta_deg, double overlap, double baseline);

using TruthCurve = std::function<double(double delay_um)>;

struct CountTable {
  std::vector<double> delays_um;
  std::vector<double> expected;
  std::vector<std::uint64_t> counts;
};

/// Poisson counts with mean truth(l) · shots at each delay. Deterministic for a
/// given (params.seed, stream). Throws std::invalid_argument on a negative rate.
CountTable simulate_counts(const ExperimentParams& params, std::span<const double> delays_um,
                           const TruthCurve& truth, std::uint64_t stream = 0);
CountTable simulate_counts(const ExperimentParams& params, std::span<const double> delays_um,
                           const TruthCurve& truth, Rng& rng);

struct McSummary {
  double mean = 0.0;
  double stddev = 0.0;
  std::vector<double> samples;
};

/// Raised when an estimator throws; carries the failing run.
class McRunError : public std::runtime_error {
 public:
  McRunError(int run, const std::string& what);
  int run() const { return run_; }

 private:
  int run_;
};

/// Mean and (n-1) standard deviation of `samples` (stddev 0 for fewer than 2).
McSummary summarize_samples(std::vector<double> samples);

/// Sample mean and (n-1) standard deviation of `estimator` over `runs` draws;
/// run r draws from make_rng(seed, r + 1). Requires runs >= 2.
McSummary monte_carlo(std::uint64_t seed, int runs, const std::function<double(Rng&)>& estimator);

/// Re-simulates the delay scan params.runs times and summarizes estimator(counts).
McSummary monte_carlo_errorbars(const ExperimentParams& params, std::span<const double> delays_um,
                                const TruthCurve& truth, const std::function<double(const CountTable&)>& estimator);

}  // namespace bosent::optics
