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

#include "bosent/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bosent/entanglement.hpp"
#include "bosent/polarization_counts.hpp"

namespace bosent::cli {

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw UsageError("unknown format '" + name + "' (expected csv or json)");
}

const char* to_string(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

namespace {

double parse_number(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first != last && *first == ' ') ++first;
  while (last != first && *(last - 1) == ' ') --last;
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) throw UsageError("not a number: '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

// SplitMix64 finalizer; decorrelates per-row seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  if (text.empty()) throw UsageError("empty grid");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("grid ranges are start:stop:step, got '" + text + "'");
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0)) throw UsageError("grid step must be > 0");
    if (stop < start) throw UsageError("grid stop must not precede start");
    // Points are start + k·step; the endpoint is kept when it lands within rounding.
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) grid.push_back(start + static_cast<double>(k) * step);
    return grid;
  }
  std::vector<double> grid;
  for (const auto& part : split(text, ',')) grid.push_back(parse_number(part));
  return grid;
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string format_fixed(double value, int digits) {
  if (value == 0.0 || std::abs(value) < 0.5 * std::pow(10.0, -digits)) value = 0.0;
  char buf[128];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, digits);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

double OverlapSettings::delta_for(double sigma_um) const {
  if (delta) {
    if (!(*delta > 0.0)) throw UsageError("--delta must be > 0");
    return *delta;
  }
  return optics::matched_delta(sigma_um, convention);
}

double selected_overlap(const ConcurrenceRecord& record, const OverlapSettings& overlap) {
  return overlap.convention == optics::OverlapConvention::Paper ? record.overlap_paper : record.overlap_quadrature;
}

ConcurrenceRecord evaluate_point(double theta_deg, double delay_um, double sigma_um, const OverlapSettings& overlap) {
  if (!(sigma_um > 0.0)) throw UsageError("--sigma-um must be > 0");
  ConcurrenceRecord r;
  r.theta_deg = theta_deg;
  r.delay_um = delay_um;
  r.sigma_um = sigma_um;
  r.delta = overlap.delta_for(sigma_um);
  r.overlap_paper = optics::gaussian_overlap(delay_um, optics::OverlapConvention::Paper, r.delta);
  r.overlap_quadrature = optics::gaussian_overlap(delay_um, optics::OverlapConvention::Quadrature, r.delta);
  r.c_optical = optics::concurrence_optical(theta_deg, delay_um, sigma_um);

  const auto [alphas, betas] = optics::spatial_amplitudes_from_theta(theta_deg);
  r.spatial_overlap = spatial_overlap_factor(alphas, betas);
  const double o = selected_overlap(r, overlap);
  r.c_closed_form = concurrence_closed_form(alphas, betas, o);

  auto [phi_a, phi_b] = dist_pair_with_overlap(o);
  const SingleParticleState a{alphas, Spin::Up, std::move(phi_a)};
  const SingleParticleState b{betas, Spin::Down, std::move(phi_b)};
  r.c_wootters_normalized = wootters_concurrence(postselected_spin_state(a, b), Normalization::Normalized);
  r.e_p = entanglement_of_particles(number_distribution(a, b));
  return r;
}

void print_record(std::ostream& out, const ConcurrenceRecord& r, const OverlapSettings& overlap) {
  out << "theta_deg            = " << format_number(r.theta_deg) << '\n'
      << "delay_um             = " << format_number(r.delay_um) << '\n'
      << "sigma_um             = " << format_number(r.sigma_um) << '\n'
      << "delta_per_um         = " << format_number(r.delta) << '\n'
      << "overlap_convention   = " << optics::to_string(overlap.convention) << '\n'
      << "spatial_overlap      = " << format_fixed(r.spatial_overlap, 6) << '\n'
      << "overlap_paper        = " << format_fixed(r.overlap_paper, 6) << '\n'
      << "overlap_quadrature   = " << format_fixed(r.overlap_quadrature, 6) << '\n'
      << "C                    = " << format_fixed(r.c_optical, 6) << '\n'
      << "c_closed_form        = " << format_fixed(r.c_closed_form, 6) << '\n'
      << "c_wootters_normalized= " << format_fixed(r.c_wootters_normalized, 6) << '\n'
      << "e_p                  = " << format_fixed(r.e_p, 6) << '\n';
}

void print_record_csv(std::ostream& out, const ConcurrenceRecord& r) {
  out << "theta_deg,delay_um,sigma_um,delta,spatial_overlap,overlap_paper,overlap_quadrature,c_optical,"
         "c_closed_form,c_wootters_normalized,e_p\n";
  out << format_number(r.theta_deg) << ',' << format_number(r.delay_um) << ',' << format_number(r.sigma_um) << ','
      << format_number(r.delta) << ',' << format_number(r.spatial_overlap) << ',' << format_number(r.overlap_paper)
      << ',' << format_number(r.overlap_quadrature) << ',' << format_number(r.c_optical) << ','
      << format_number(r.c_closed_form) << ',' << format_number(r.c_wootters_normalized) << ','
      << format_number(r.e_p) << '\n';
}

void print_record_json(std::ostream& out, const ConcurrenceRecord& r, const OverlapSettings& overlap) {
  nlohmann::ordered_json j;
  j["theta_deg"] = r.theta_deg;
  j["delay_um"] = r.delay_um;
  j["sigma_um"] = r.sigma_um;
  j["delta"] = r.delta;
  j["overlap_convention"] = optics::to_string(overlap.convention);
  j["spatial_overlap"] = r.spatial_overlap;
  j["overlap_paper"] = r.overlap_paper;
  j["overlap_quadrature"] = r.overlap_quadrature;
  j["c_optical"] = r.c_optical;
  j["c_closed_form"] = r.c_closed_form;
  j["c_wootters_normalized"] = r.c_wootters_normalized;
  j["e_p"] = r.e_p;
  out << j.dump(2) << '\n';
}

void validate(const SweepConfig& c) {
  if (c.theta_grid.empty()) throw UsageError("--theta-grid is empty");
  if (c.delay_grid.empty()) throw UsageError("--delay-grid is empty");
  if (!(c.sigma_um > 0.0)) throw UsageError("--sigma-um must be > 0");
  if (!(c.shots >= 1.0)) throw UsageError("--shots must be >= 1");
  if (c.runs < 1) throw UsageError("--runs must be >= 1");
  if (c.noisy && c.runs < 2) throw UsageError("--noisy needs --runs >= 2");
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate(config);
  std::vector<SweepRow> rows;
  rows.reserve(config.theta_grid.size() * config.delay_grid.size());
  std::uint64_t index = 0;
  for (double theta : config.theta_grid) {
    for (double l : config.delay_grid) {
      SweepRow row;
      row.point = evaluate_point(theta, l, config.sigma_um, config.overlap);
      if (config.noisy) {
        const auto [alphas, betas] = optics::spatial_amplitudes_from_theta(theta);
        auto [phi_a, phi_b] = dist_pair_with_overlap(selected_overlap(row.point, config.overlap));
        const SpinDensityMatrix rho = postselected_spin_state({alphas, Spin::Up, std::move(phi_a)},
                                                              {betas, Spin::Down, std::move(phi_b)});
        const auto mc = optics::monte_carlo(mix_seed(config.seed, index), config.runs, [&](Rng& rng) {
          return optics::estimate_concurrence(optics::simulate_polarization_counts(rho, config.shots, rng));
        });
        row.c_mc_mean = mc.mean;
        row.c_mc_stddev = mc.stddev;
      }
      rows.push_back(row);
      ++index;
    }
  }
  return rows;
}

std::vector<std::string> sweep_columns(bool noisy) {
  std::vector<std::string> cols{"theta_deg",     "delay_um",      "spatial_overlap",       "overlap_paper",
                                "overlap_quadrature", "c_closed_form", "c_wootters_normalized", "e_p"};
  if (noisy) {
    cols.emplace_back("c_mc_mean");
    cols.emplace_back("c_mc_stddev");
  }
  return cols;
}

namespace {

std::vector<double> row_values(const SweepRow& row, bool noisy) {
  const auto& p = row.point;
  std::vector<double> v{p.theta_deg,          p.delay_um,      p.spatial_overlap,         p.overlap_paper,
                        p.overlap_quadrature, p.c_closed_form, p.c_wootters_normalized, p.e_p};
  if (noisy) {
    v.push_back(row.c_mc_mean);
    v.push_back(row.c_mc_stddev);
  }
  return v;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool noisy) {
  const auto cols = sweep_columns(noisy);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& row : rows) {
    const auto values = row_values(row, noisy);
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << format_number(values[i]);
    out << '\n';
  }
}

void write_sweep_json(std::ostream& out, const SweepConfig& config, const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json meta;
  meta["tool"] = "bosent";
  meta["version"] = kToolVersion;
  meta["command"] = "sweep";
  meta["seed"] = config.seed;
  nlohmann::ordered_json cfg;
  cfg["theta_grid"] = config.theta_grid;
  cfg["delay_grid"] = config.delay_grid;
  cfg["sigma_um"] = config.sigma_um;
  cfg["overlap_convention"] = optics::to_string(config.overlap.convention);
  if (config.overlap.delta) {
    cfg["delta"] = *config.overlap.delta;
  } else {
    cfg["delta"] = nullptr;
  }
  cfg["shots"] = config.shots;
  cfg["runs"] = config.runs;
  cfg["noisy"] = config.noisy;
  meta["config"] = cfg;

  nlohmann::ordered_json doc;
  doc["metadata"] = meta;
  const auto cols = sweep_columns(config.noisy);
  doc["columns"] = cols;
  auto& out_rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    const auto values = row_values(row, config.noisy);
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < cols.size(); ++i) obj[cols[i]] = values[i];
    out_rows.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void validate(const HomConfig& c) {
  if (!(c.visibility >= 0.0 && c.visibility <= 1.0)) throw UsageError("--visibility must lie in [0, 1]");
  if (!(c.fwhm_um > 0.0)) throw UsageError("--fwhm-um must be > 0");
  if (!(c.shots >= 1.0)) throw UsageError("--shots must be >= 1");
  if (c.runs < 1) throw UsageError("--runs must be >= 1");
}

std::vector<double> default_hom_grid() { return parse_grid("-300:300:10"); }

optics::TruthCurve hom_truth(const HomConfig& config) {
  const double width = config.fwhm_um / optics::kFwhmPerSigma;
  const double peak = std::sqrt(config.visibility);
  const double theta = config.theta_deg;
  return [=](double l) {
    const double overlap = peak * std::exp(-l * l / (4.0 * width * width));
    return optics::hom_coincidence(theta, overlap, 1.0);
  };
}

std::vector<optics::CurvePoint> to_points(std::span<const double> delays, std::span<const double> counts) {
  std::vector<optics::CurvePoint> pts;
  pts.reserve(delays.size());
  for (std::size_t i = 0; i < delays.size() && i < counts.size(); ++i) pts.push_back({delays[i], counts[i]});
  return pts;
}

std::vector<optics::CurvePoint> to_points(const optics::CountTable& table) {
  std::vector<double> counts(table.counts.begin(), table.counts.end());
  return to_points(table.delays_um, counts);
}

HomReport run_hom(const HomConfig& config) {
  validate(config);
  const std::vector<double> grid = config.delay_grid.empty() ? default_hom_grid() : config.delay_grid;
  optics::ExperimentParams params;
  params.theta_deg = config.theta_deg;
  params.shots = config.shots;
  params.seed = config.seed;
  params.runs = config.runs;

  HomReport report;
  report.data = optics::simulate_counts(params, grid, hom_truth(config));
  if (config.noisy) {
    report.observed.assign(report.data.counts.begin(), report.data.counts.end());
  } else {
    report.observed = report.data.expected;
  }

  const auto points = to_points(grid, report.observed);
  try {
    report.fit = optics::fit_gaussian_dip(points);
  } catch (const optics::NoDipDetected& e) {
    report.failure = e.what();
    return report;
  } catch (const optics::FitNotConverged& e) {
    report.failure = e.what();
    return report;
  }

  if (config.runs >= 2) {
    // Error bars: refit Poisson resamplings of the observed counts.
    std::vector<double> vis, fwhm;
    const std::uint64_t seed = mix_seed(config.seed, 0x484f4d);
    for (int r = 0; r < config.runs; ++r) {
      Rng rng = make_rng(seed, static_cast<std::uint64_t>(r) + 1);
      std::vector<double> resampled(report.observed.size());
      for (std::size_t i = 0; i < resampled.size(); ++i) {
        const double mean = report.observed[i];
        if (mean > 0.0) {
          std::poisson_distribution<std::uint64_t> poisson(mean);
          resampled[i] = static_cast<double>(poisson(rng));
        }
      }
      try {
        const auto fit = optics::fit_gaussian_dip(to_points(grid, resampled));
        vis.push_back(fit.visibility);
        fwhm.push_back(fit.fwhm);
      } catch (const std::exception& e) {
        throw optics::McRunError(r, e.what());
      }
    }
    report.visibility_mc = optics::summarize_samples(std::move(vis));
    report.fwhm_mc = optics::summarize_samples(std::move(fwhm));
  }
  return report;
}

void write_hom_data(std::ostream& out, const HomConfig& config, const HomReport& report) {
  const auto& d = report.data;
  if (config.format == OutputFormat::Json) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta;
    meta["tool"] = "bosent";
    meta["version"] = kToolVersion;
    meta["command"] = "hom";
    meta["seed"] = config.seed;
    meta["config"] = {{"theta_deg", config.theta_deg}, {"visibility", config.visibility},
                      {"fwhm_um", config.fwhm_um},     {"shots", config.shots},
                      {"runs", config.runs},           {"noisy", config.noisy}};
    doc["metadata"] = meta;
    doc["columns"] = {"delay_um", "expected_counts", "counts"};
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < d.delays_um.size(); ++i) {
      nlohmann::ordered_json row;
      row["delay_um"] = d.delays_um[i];
      row["expected_counts"] = d.expected[i];
      row["counts"] = report.observed[i];
      rows.push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "delay_um,expected_counts,counts\n";
  for (std::size_t i = 0; i < d.delays_um.size(); ++i) {
    out << format_number(d.delays_um[i]) << ',' << format_number(d.expected[i]) << ','
        << format_number(report.observed[i]) << '\n';
  }
}

void print_hom_report(std::ostream& out, const HomConfig& config, const HomReport& report) {
  out << "truth: visibility = " << format_fixed(config.visibility, 6) << ", fwhm_um = " << format_fixed(config.fwhm_um, 6)
      << (config.noisy ? " (Poisson noise)" : " (noiseless)") << '\n';
  if (!report.fit) {
    out << "fit failed: " << report.failure << '\n';
    return;
  }
  const auto& f = *report.fit;
  out << "fit: baseline = " << format_fixed(f.baseline, 6) << ", center_um = " << format_fixed(f.center, 6)
      << ", iterations = " << f.iterations << ", residual = " << format_number(f.residual) << '\n';
  out << "visibility = " << format_fixed(f.visibility, 6) << " +/- " << format_fixed(f.visibility_error, 6)
      << " (fit)";
  if (report.visibility_mc) {
    out << " +/- " << format_fixed(report.visibility_mc->stddev, 6) << " (MC, " << report.visibility_mc->samples.size()
        << " runs)";
  }
  out << '\n';
  out << "fwhm_um = " << format_fixed(f.fwhm, 6) << " +/- " << format_fixed(f.fwhm_error, 6) << " (fit)";
  if (report.fwhm_mc) {
    out << " +/- " << format_fixed(report.fwhm_mc->stddev, 6) << " (MC, " << report.fwhm_mc->samples.size() << " runs)";
  }
  out << '\n';
}

}  // namespace bosent::cli
