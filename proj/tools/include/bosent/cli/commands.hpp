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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bosent/gaussian_fit.hpp"
#include "bosent/optics.hpp"

namespace bosent::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitSuccess = 0,
  kExitUsage = 1,
  kExitNumerical = 2,
  kExitVerification = 3,
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);
const char* to_string(OutputFormat f);

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "start:stop:step" (inclusive), a comma list, or a single number.
std::vector<double> parse_grid(const std::string& text);

/// Shortest round-trip decimal, locale independent. -0 prints as 0.
std::string format_number(double value);
/// Fixed notation with `digits` decimals, locale independent.
std::string format_fixed(double value, int digits);

/// Which overlap model feeds the concurrence columns, and at what spectral width.
struct OverlapSettings {
  optics::OverlapConvention convention = optics::OverlapConvention::Paper;
  /// Spectral width in 1/µm. When unset, the convention's matched width for sigma is used.
  std::optional<double> delta;

  double delta_for(double sigma_um) const;
};

/// Everything reported for one (θ, l) point.
struct ConcurrenceRecord {
  double theta_deg = 0.0;
  double delay_um = 0.0;
  double sigma_um = 0.0;
  double delta = 0.0;
  double spatial_overlap = 0.0;
  double overlap_paper = 0.0;
  double overlap_quadrature = 0.0;
  /// sin^2(4θ) exp(-l^2 / 2σ^2).
  double c_optical = 0.0;
  double c_closed_form = 0.0;
  double c_wootters_normalized = 0.0;
  double e_p = 0.0;
};

ConcurrenceRecord evaluate_point(double theta_deg, double delay_um, double sigma_um, const OverlapSettings& overlap);

/// The selected convention's overlap at `record`.
double selected_overlap(const ConcurrenceRecord& record, const OverlapSettings& overlap);

void print_record(std::ostream& out, const ConcurrenceRecord& record, const OverlapSettings& overlap);
void print_record_csv(std::ostream& out, const ConcurrenceRecord& record);
void print_record_json(std::ostream& out, const ConcurrenceRecord& record, const OverlapSettings& overlap);

struct SweepConfig {
  std::vector<double> theta_grid{22.5};
  std::vector<double> delay_grid{0.0};
  double sigma_um = optics::kDefaultSigmaUm;
  OverlapSettings overlap;
  double shots = 1000.0;
  int runs = 100;
  std::uint64_t seed = 0;
  bool noisy = false;
  OutputFormat format = OutputFormat::Csv;
  std::string output;
};

/// Throws UsageError on empty grids or non-positive sigma/shots/runs.
void validate(const SweepConfig& config);

struct SweepRow {
  ConcurrenceRecord point;
  double c_mc_mean = 0.0;
  double c_mc_stddev = 0.0;
};

/// One row per (θ, l), θ-major. With `noisy`, each row gets Monte Carlo
/// statistics of the concurrence estimated from Poisson coincidence counts.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

std::vector<std::string> sweep_columns(bool noisy);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool noisy);
void write_sweep_json(std::ostream& out, const SweepConfig& config, const std::vector<SweepRow>& rows);

struct HomConfig {
  double theta_deg = 22.5;
  double visibility = 0.99;
  double fwhm_um = 132.0;
  std::vector<double> delay_grid;
  /// Non-interfering coincidence counts per delay point.
  double shots = 1000.0;
  int runs = 100;
  std::uint64_t seed = 0;
  bool noisy = false;
  OutputFormat format = OutputFormat::Csv;
  std::string output;
};

void validate(const HomConfig& config);

/// Default scan: -300 µm to 300 µm in 10 µm steps.
std::vector<double> default_hom_grid();

/// Coincidence rate per shot at delay l: hom_coincidence with
/// overlap(l) = sqrt(V) exp(-l^2 / 4w^2), w = FWHM / 2√(2 ln 2).
optics::TruthCurve hom_truth(const HomConfig& config);

struct HomReport {
  optics::CountTable data;
  /// Counts handed to the fit: the Poisson draw when noisy, else data.expected.
  std::vector<double> observed;
  std::optional<optics::GaussianFit> fit;
  std::optional<optics::McSummary> visibility_mc;
  std::optional<optics::McSummary> fwhm_mc;
  std::string failure;
};

/// Observed counts (a Poisson draw when noisy, else the expectation), the fit
/// and Monte Carlo error bars from Poisson resampling of the observed counts.
HomReport run_hom(const HomConfig& config);

std::vector<optics::CurvePoint> to_points(const optics::CountTable& table);
std::vector<optics::CurvePoint> to_points(std::span<const double> delays, std::span<const double> counts);

void write_hom_data(std::ostream& out, const HomConfig& config, const HomReport& report);
void print_hom_report(std::ostream& out, const HomConfig& config, const HomReport& report);

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  /// Multiplies every suite tolerance; a negative value forces failures.
  double tolerance_scale = 1.0;
};

struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  int checks = 0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  /// Numbers reported without a pass/fail verdict.
  std::vector<std::pair<std::string, double>> notes;
  bool passed() const;
};

VerifyReport run_verify(const VerifyOptions& options);
void print_verify_report(std::ostream& out, const VerifyReport& report);

}  // namespace bosent::cli
