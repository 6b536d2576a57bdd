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

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>

#include "bosent/cli/commands.hpp"
#include "bosent/entanglement.hpp"
#include "bosent/fq_oracle.hpp"
#include "bosent/gaussian_fit.hpp"
#include "bosent/nolabel_algebra.hpp"
#include "bosent/optics.hpp"
#include "bosent/sampling.hpp"

namespace bosent::cli {

namespace {

// Running maximum of |deviation| for one suite.
class Suite {
 public:
  Suite(std::string name, double tolerance) : result_{std::move(name), 0.0, tolerance, 0, false} {}

  void record(double deviation) {
    ++result_.checks;
    if (std::isnan(deviation)) deviation = INFINITY;
    result_.max_deviation = std::max(result_.max_deviation, std::abs(deviation));
  }

  SuiteResult finish(double scale) {
    result_.tolerance *= scale;
    result_.passed = result_.max_deviation <= result_.tolerance;
    return result_;
  }

 private:
  SuiteResult result_;
};

double matrix_deviation(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) { return (a - b).cwiseAbs().maxCoeff(); }

std::size_t dim_for(int trial) { return static_cast<std::size_t>(trial % 3) + 1; }

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.trials < 1) throw UsageError("--trials must be >= 1");
  VerifyReport report;
  const double scale = options.tolerance_scale;
  const int n = options.trials;
  std::uint64_t stream = 0;
  const auto next_rng = [&] { return make_rng(options.seed, ++stream); };

  {
    Suite s("core_state.inner_single", kExactTolerance);
    Rng rng = next_rng();
    for (int t = 0; t < n; ++t) {
      const std::size_t d = dim_for(t);
      const auto x = random_particle(rng, d);
      const auto y = random_particle(rng, d);
      const Complex xy = inner_single(x, y);
      s.record(std::abs(xy - std::conj(inner_single(y, x))));
      s.record(std::max(0.0, std::abs(xy) - 1.0));
      s.record(std::abs(xy - oracle::slot_vector(x).dot(oracle::slot_vector(y))));
      s.record(std::abs(inner_single(x, x) - 1.0));
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("fq_oracle.transition_equivalence", kExactTolerance);
    Rng rng = next_rng();
    for (int t = 0; t < n; ++t) {
      const std::size_t d = dim_for(t);
      const auto a = random_particle(rng, d), b = random_particle(rng, d);
      const auto c = random_particle(rng, d), e = random_particle(rng, d);
      const Complex no_label = transition_two({c, e}, {a, b});
      const Complex labeled = oracle::labeled_inner(oracle::symmetrize(c, e), oracle::symmetrize(a, b));
      s.record(std::abs(no_label - labeled));
      // Single-particle projection contracted with a test state.
      s.record(std::abs(project_single(c, {a, b}).contract(e) - no_label / std::sqrt(2.0)));
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("fq_oracle.swap_invariance", 0.0);
    Rng rng = next_rng();
    for (int t = 0; t < n; ++t) {
      const std::size_t d = dim_for(t);
      const auto a = random_particle(rng, d), b = random_particle(rng, d);
      const auto ab = oracle::symmetrize(a, b);
      s.record((ab.amplitudes() - oracle::symmetrize(b, a).amplitudes()).cwiseAbs().maxCoeff());
      s.record((ab.amplitudes() - ab.swapped().amplitudes()).cwiseAbs().maxCoeff());
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("fq_oracle.density_equivalence", kExactTolerance);
    Rng rng = next_rng();
    for (int t = 0; t < n; ++t) {
      const std::size_t d = dim_for(t);
      const auto a = random_particle(rng, d, Spin::Up);
      const auto b = random_particle(rng, d, Spin::Down);
      const SpinDensityMatrix no_label = postselected_spin_state(a, b);
      const SpinDensityMatrix brute = oracle::oracle_postselected_density(oracle::symmetrize(a, b));
      s.record(matrix_deviation(no_label.matrix, brute.matrix));
      s.record(no_label.weight - brute.weight);
      s.record(invariant_deviation(no_label));
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("nolabel_algebra.norm", kExactTolerance);
    Rng rng = next_rng();
    for (int t = 0; t < n; ++t) {
      const std::size_t d = dim_for(t);
      const auto a = random_particle(rng, d), b = random_particle(rng, d);
      const Complex self = transition_two({a, b}, {a, b});
      s.record(self.imag());
      s.record(std::min(0.0, self.real()));
      s.record(self.real() - oracle::symmetrize(a, b).norm_squared());
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("nolabel_algebra.postselect_idempotent", 0.0);
    Rng rng = next_rng();
    for (int t = 0; t < n; ++t) {
      const std::size_t d = dim_for(t);
      const auto once = postselect_one_per_detector(
          expand_in_detector_basis(random_particle(rng, d, Spin::Up), random_particle(rng, d, Spin::Down)));
      s.record(postselect_one_per_detector(once) == once ? 0.0 : 1.0);
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("nolabel_algebra.expansion_norm", kExactTolerance);
    Rng rng = next_rng();
    for (int t = 0; t < n; ++t) {
      const std::size_t d = dim_for(t);
      const auto a = random_particle(rng, d, Spin::Up);
      const auto b = random_particle(rng, d, Spin::Down);
      const auto expanded = expand_in_detector_basis(a, b);
      double sum = 0.0;
      for (const auto& term : expanded.terms()) sum += std::norm(term.coefficient);
      s.record(sum - 1.0);
      s.record(inner(expanded, expanded).real() - oracle::symmetrize(a, b).norm_squared());
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("entanglement.balanced_closed_form", kPipelineTolerance);
    Rng rng = next_rng();
    const double r = 1.0 / std::sqrt(2.0);
    const SpatialAmplitudes balanced{r, r};
    for (int t = 0; t < n; ++t) {
      const Complex o = random_overlap(rng);
      auto [pa, pb] = dist_pair_with_overlap(o);
      const SpinDensityMatrix rho = postselected_spin_state({balanced, Spin::Up, pa}, {balanced, Spin::Down, pb});
      const double closed = concurrence_closed_form(balanced, balanced, o);
      s.record(wootters_concurrence(rho, Normalization::Normalized) - closed);
      s.record(closed - std::norm(o));
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("entanglement.unnormalized_wootters", kPipelineTolerance);
    Rng rng = next_rng();
    for (int t = 0; t < n; ++t) {
      const std::size_t d = dim_for(t) + 1;
      const auto a = random_particle(rng, d, Spin::Up);
      const auto b = random_particle(rng, d, Spin::Down);
      const Complex o = dist_inner(a.dist, b.dist);
      const SpinDensityMatrix rho = postselected_spin_state(a, b);
      s.record(concurrence_closed_form(a.spatial, b.spatial, o) - 2.0 * wootters_concurrence(rho, Normalization::Raw));
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("entanglement.monotonicity", 0.0);
    Rng rng = next_rng();
    for (int t = 0; t < n; ++t) {
      const auto alphas = random_spatial(rng);
      const auto betas = random_spatial(rng);
      double previous = -1.0;
      for (int k = 0; k <= 20; ++k) {
        const double c = concurrence_closed_form(alphas, betas, k / 20.0);
        s.record(std::max(0.0, previous - c));
        previous = c;
      }
      const double o = std::abs(random_overlap(rng));
      // sin^2(4θ) increases on [0°, 22.5°].
      previous = -1.0;
      for (int k = 0; k <= 18; ++k) {
        const auto [al, be] = optics::spatial_amplitudes_from_theta(22.5 * k / 18.0);
        const double c = concurrence_closed_form(al, be, o);
        s.record(std::max(0.0, previous - c));
        previous = c;
      }
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("entanglement.particles_range", kExactTolerance);
    Rng rng = next_rng();
    for (int t = 0; t < n; ++t) {
      const std::size_t d = dim_for(t) + 1;
      const auto a = random_particle(rng, d, Spin::Up);
      const auto b = random_particle(rng, d, Spin::Down);
      const double ep = entanglement_of_particles(number_distribution(a, b));
      s.record(std::max(0.0, -ep));
      s.record(std::max(0.0, ep - 1.0));
      auto [pa, pb] = dist_pair_with_overlap(0.0);
      s.record(entanglement_of_particles(number_distribution({a.spatial, Spin::Up, pa}, {b.spatial, Spin::Down, pb})));
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("optics.optical_splice", kExactTolerance);
    Rng rng = next_rng();
    std::uniform_real_distribution<double> theta(-90.0, 90.0), delay(-400.0, 400.0), sigma(10.0, 150.0);
    for (int t = 0; t < n; ++t) {
      const double th = theta(rng), l = delay(rng), sg = sigma(rng);
      const auto [al, be] = optics::spatial_amplitudes_from_theta(th);
      const double o = std::exp(-l * l / (4.0 * sg * sg));
      const double c = optics::concurrence_optical(th, l, sg);
      s.record(c - concurrence_closed_form(al, be, o));
      s.record(spatial_overlap_factor(al, be) - optics::spatial_overlap_from_theta(th));
      s.record(c - optics::concurrence_optical(th, -l, sg));
      s.record(c - optics::concurrence_optical(th + 45.0, l, sg));
      s.record(std::max(0.0, c - optics::concurrence_optical(22.5, 0.0, sg)));
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("optics.section_fits", kPipelineTolerance);
    Rng rng = next_rng();
    std::uniform_real_distribution<double> theta(5.0, 40.0), delay(0.0, 200.0), sigma(30.0, 90.0);
    const int fits = std::max(1, std::min(n, 20));
    for (int t = 0; t < fits; ++t) {
      const double th = theta(rng), l0 = delay(rng), sg = sigma(rng);
      std::vector<optics::CurvePoint> l_section;
      for (int k = -40; k <= 40; ++k) l_section.push_back({sg * k / 8.0, optics::concurrence_optical(th, sg * k / 8.0, sg)});
      optics::FitOptions fo;
      fo.errors = optics::ErrorModel::Residual;
      const auto fit = optics::fit_gaussian_peak(l_section, fo);
      s.record((fit.fwhm - optics::kFwhmPerSigma * sg) / (optics::kFwhmPerSigma * sg));
      std::vector<optics::CurvePoint> t_section;
      for (int k = 0; k <= 18; ++k) t_section.push_back({2.5 * k, optics::concurrence_optical(2.5 * k, l0, sg)});
      const auto sin2 = optics::fit_sin2_4theta(t_section);
      s.record(sin2.residual);
      s.record(sin2.amplitude - std::exp(-l0 * l0 / (2.0 * sg * sg)));
    }
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("optics.hom_monotone", kExactTolerance);
    double previous = INFINITY;
    for (int k = 0; k <= 50; ++k) {
      const double c = optics::hom_coincidence(22.5, k / 50.0, 1000.0);
      s.record(std::max(0.0, c - previous));
      previous = c;
    }
    s.record(optics::hom_coincidence(22.5, 1.0, 1000.0));
    s.record(optics::hom_coincidence(22.5, 0.0, 1000.0) - 1000.0);
    report.suites.push_back(s.finish(scale));
  }

  {
    Suite s("optics.quadrature_overlap", kPipelineTolerance);
    Rng rng = next_rng();
    std::uniform_real_distribution<double> delta(0.002, 0.05), delay(-400.0, 400.0);
    double exponent_ratio = 0.0;
    for (int t = 0; t < n; ++t) {
      const double dl = delta(rng), l = delay(rng);
      const double quad = optics::gaussian_overlap(l, optics::OverlapConvention::Quadrature, dl);
      s.record(quad - std::exp(-0.5 * dl * dl * l * l));
      const double paper = optics::gaussian_overlap(l, optics::OverlapConvention::Paper, dl);
      if (std::abs(l) > 1.0 && quad > 1e-6) {
        exponent_ratio = std::max(exponent_ratio, std::abs(std::log(paper) / std::log(quad)));
      }
    }
    report.notes.emplace_back("overlap exponent ratio ln(paper)/ln(quadrature)", exponent_ratio);
    report.suites.push_back(s.finish(scale));
  }

  return report;
}

void print_verify_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& s : report.suites) {
    out << (s.passed ? "PASS " : "FAIL ") << s.name << "  checks=" << s.checks
        << "  max_deviation=" << format_number(s.max_deviation) << "  tolerance=" << format_number(s.tolerance) << '\n';
  }
  for (const auto& [label, value] : report.notes) out << "NOTE " << label << " = " << format_number(value) << '\n';
  out << (report.passed() ? "verify: all suites passed" : "verify: FAILED") << '\n';
}

}  // namespace bosent::cli
