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

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bosent/cli/commands.hpp"
#include "bosent/entanglement.hpp"

namespace {

using namespace bosent;
using namespace bosent::cli;

struct Flags {
  double theta_deg = 22.5;
  double delay_um = 0.0;
  double sigma_um = optics::kDefaultSigmaUm;
  std::optional<double> delta;
  std::string theta_grid = "22.5";
  std::string delay_grid = "0";
  double shots = 1000.0;
  int runs = 100;
  std::uint64_t seed = 0;
  bool noisy = false;
  std::string convention = "paper";
  std::string out;
  std::string format = "csv";
  double visibility = 0.99;
  double fwhm_um = 132.0;
  int trials = 100;
  double tolerance_scale = 1.0;
  bool text = true;
};

OverlapSettings overlap_settings(const Flags& f) {
  OverlapSettings s;
  s.convention = optics::parse_overlap_convention(f.convention);
  s.delta = f.delta;
  return s;
}

// Writes through `write` to --out, or to stdout when no path was given.
template <typename Write>
void emit(const std::string& path, Write write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  write(file);
  file.flush();
  if (!file) throw UsageError("failed writing output file '" + path + "'");
}

void add_overlap_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--sigma-um", f.sigma_um, "Width sigma of the concurrence-vs-delay Gaussian (um)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--delta", f.delta, "Spectral width delta (1/um); default matches --sigma-um")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--overlap-convention", f.convention, "Overlap model feeding the concurrence: paper|quadrature")
      ->check(CLI::IsMember({"paper", "quadrature"}));
}

int run(int argc, char** argv) {
  CLI::App app{"Entanglement of two identical bosons from spatial overlap and indistinguishability"};
  app.set_version_flag("--version", std::string("bosent ") + kToolVersion);
  app.require_subcommand(1);
  Flags f;

  auto* conc = app.add_subcommand("concurrence", "Evaluate the concurrence at one (theta, delay) point");
  conc->add_option("--theta-deg", f.theta_deg, "Half-wave-plate angle theta (degrees)");
  conc->add_option("--delay-um", f.delay_um, "Optical delay l (um)");
  add_overlap_flags(conc, f);
  conc->add_option("--format", f.format, "Output format: text|csv|json")->check(CLI::IsMember({"text", "csv", "json"}));
  f.format = "text";

  auto* sweep = app.add_subcommand("sweep", "Tabulate concurrence over a (theta, delay) grid");
  sweep->add_option("--theta-grid", f.theta_grid, "Angles: start:stop:step or a,b,c (degrees)");
  sweep->add_option("--delay-grid", f.delay_grid, "Delays: start:stop:step or a,b,c (um)");
  add_overlap_flags(sweep, f);
  sweep->add_option("--shots", f.shots, "Coincidences per analyzer setting at unit post-selection weight")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--runs", f.runs, "Monte Carlo runs")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", f.seed, "Random seed");
  sweep->add_flag("--noisy", f.noisy, "Add Monte Carlo concurrence columns from Poisson counts");
  sweep->add_option("--out", f.out, "Output path (default stdout)");
  sweep->add_option("--format", f.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* hom = app.add_subcommand("hom", "Simulate a HOM delay scan and fit the dip");
  hom->add_option("--theta-deg", f.theta_deg, "Half-wave-plate angle theta (degrees)");
  hom->add_option("--visibility", f.visibility, "Truth visibility")->check(CLI::Range(0.0, 1.0));
  hom->add_option("--fwhm-um", f.fwhm_um, "Truth dip FWHM (um)")->check(CLI::PositiveNumber);
  hom->add_option("--delay-grid", f.delay_grid, "Delays: start:stop:step or a,b,c (um)");
  hom->add_option("--shots", f.shots, "Non-interfering coincidences per delay")->check(CLI::PositiveNumber);
  hom->add_option("--runs", f.runs, "Monte Carlo runs for error bars")->check(CLI::PositiveNumber);
  hom->add_option("--seed", f.seed, "Random seed");
  hom->add_flag("--noisy", f.noisy, "Draw Poisson counts instead of using the expectation");
  hom->add_option("--out", f.out, "Output path for the count table (default stdout)");
  hom->add_option("--format", f.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the oracle-equivalence and invariant suites");
  verify->add_option("--trials", f.trials, "Random draws per suite")->check(CLI::PositiveNumber);
  verify->add_option("--seed", f.seed, "Random seed");
  verify->add_option("--tolerance-scale", f.tolerance_scale, "Multiplier on every tolerance")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  if (*conc) {
    const auto settings = overlap_settings(f);
    const auto record = evaluate_point(f.theta_deg, f.delay_um, f.sigma_um, settings);
    if (f.format == "json") {
      print_record_json(std::cout, record, settings);
    } else if (f.format == "csv") {
      print_record_csv(std::cout, record);
    } else {
      print_record(std::cout, record, settings);
    }
    return kExitSuccess;
  }

  if (*sweep) {
    if (f.format == "text") f.format = "csv";
    SweepConfig config;
    config.theta_grid = parse_grid(f.theta_grid);
    config.delay_grid = parse_grid(f.delay_grid);
    config.sigma_um = f.sigma_um;
    config.overlap = overlap_settings(f);
    config.shots = f.shots;
    config.runs = f.runs;
    config.seed = f.seed;
    config.noisy = f.noisy;
    config.format = parse_format(f.format);
    config.output = f.out;
    const auto rows = run_sweep(config);
    emit(config.output, [&](std::ostream& os) {
      if (config.format == OutputFormat::Json) {
        write_sweep_json(os, config, rows);
      } else {
        write_sweep_csv(os, rows, config.noisy);
      }
    });
    return kExitSuccess;
  }

  if (*hom) {
    if (f.format == "text") f.format = "csv";
    HomConfig config;
    config.theta_deg = f.theta_deg;
    config.visibility = f.visibility;
    config.fwhm_um = f.fwhm_um;
    if (!hom->get_option("--delay-grid")->empty()) config.delay_grid = parse_grid(f.delay_grid);
    config.shots = f.shots;
    config.runs = f.runs;
    config.seed = f.seed;
    config.noisy = f.noisy;
    config.format = parse_format(f.format);
    config.output = f.out;
    const auto report = run_hom(config);
    emit(config.output, [&](std::ostream& os) { write_hom_data(os, config, report); });
    print_hom_report(config.output.empty() ? std::cerr : std::cout, config, report);
    return report.fit ? kExitSuccess : kExitNumerical;
  }

  if (*verify) {
    VerifyOptions options;
    options.trials = f.trials;
    options.seed = f.seed;
    options.tolerance_scale = f.tolerance_scale;
    const auto report = run_verify(options);
    print_verify_report(std::cout, report);
    return report.passed() ? kExitSuccess : kExitVerification;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}
