// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "cmest/accumulator.hpp"
#include "cmest/asv.hpp"
#include "cmest/channel.hpp"
#include "cmest/error.hpp"
#include "cmest/estimators.hpp"
#include "cmest/experiment.hpp"
#include "cmest/optimize.hpp"
#include "cmest/specfun.hpp"

using namespace cmest;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double asv(const NoiseModel& m, double s, double w) { return asv_generic(AsvContext{m, s, 1.0}, w); }

NetworkConfig total_power_network(std::size_t sensors) {
  NetworkConfig n;
  n.sensors = sensors;
  n.theta = 2.0;
  n.theta_range = 12.0;
  n.omega = 2.0 * kPi / 12.0;
  n.power = TotalPower{10.0};
  n.channel_noise_variance = 1.0;
  return n;
}

SeriesSpec series(std::string name, NoiseModel noise, Scheme scheme = Scheme::ConstantModulus) {
  SeriesSpec s;
  s.name = std::move(name);
  s.noise = std::move(noise);
  s.scheme = scheme;
  return s;
}

std::vector<SeriesSpec> four_noises() {
  return {series("gaussian", NoiseModel::gaussian(1.0)), series("laplace", NoiseModel::laplace(1.0)),
          series("uniform", NoiseModel::uniform(1.0)), series("cauchy", NoiseModel::cauchy(1.0))};
}

// 1. total power regime, 12 omegas per distribution where AsV <= 10
Outcome analytic_vs_simulation_total() {
  const double s = 0.1;
  const double wmax = 2.0 * kPi / 12.0;
  bool pass = true;
  std::string detail;
  for (const SeriesSpec& base : four_noises()) {
    const NoiseModel& m = *base.noise;
    // AsV falls from +inf at the origin; find where it crosses 10
    double lo = 1e-4, hi = wmax;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (asv(m, s, mid) > 10.0 ? lo : hi) = mid;
    }
    const double w0 = 1.05 * hi;
    ExperimentSpec spec;
    spec.name = "c1-" + base.name;
    spec.network = total_power_network(500);
    spec.sweep_variable = SweepVariable::Omega;
    for (int i = 0; i < 12; ++i) spec.sweep.push_back(w0 + (wmax - w0) * i / 11.0);
    spec.sweep.back() = wmax;
    spec.series = {base};
    spec.trials = 200000;
    spec.seed = 101;
    const auto r = run_experiment(spec);
    double worst = 0.0;
    for (const auto& rec : r.series[0].records) {
      if (rec.analytic_asv > 10.0) pass = false;
      worst = std::max(worst, std::abs(rec.normalized_variance - rec.analytic_asv) / rec.analytic_asv);
    }
    pass = pass && worst <= 0.05;
    detail += fmt("%s max rel err %.4f; ", base.name.c_str(), worst);
  }
  return {pass, detail};
}

// 2. per-sensor regime plus the small-omega finite-sample inflation
Outcome analytic_vs_simulation_per_sensor() {
  bool pass = true;
  std::string detail;
  ExperimentSpec spec;
  spec.name = "c2";
  spec.network = total_power_network(500);
  spec.network.theta_range = 4.0;
  spec.network.power = PerSensorPower{1.0};
  spec.sweep_variable = SweepVariable::Omega;
  spec.sweep = {0.3, 0.5, 0.75, 1.0, 1.25, 1.5};
  spec.series = four_noises();
  spec.trials = 100000;
  spec.seed = 202;
  const auto r = run_experiment(spec);
  for (const auto& sr : r.series) {
    double worst = 0.0;
    double worst_w = 0.0;
    for (const auto& rec : sr.records) {
      const double rel = std::abs(rec.normalized_variance - rec.analytic_asv) / rec.analytic_asv;
      if (rel > worst) {
        worst = rel;
        worst_w = rec.sweep_value;
      }
    }
    pass = pass && worst <= 0.05;
    detail += fmt("%s max rel err %.4f (w=%.2f); ", sr.name.c_str(), worst, worst_w);
  }

  // finite-variance laws only; Cauchy's own AsV already grows like 1/omega here
  ExperimentSpec small = spec;
  small.network.sensors = 50;
  small.sweep = {0.02};
  small.series.resize(3);
  small.trials = 20000;
  small.seed = 203;
  const auto q = run_experiment(small);
  for (const auto& sr : q.series) {
    const auto& rec = sr.records[0];
    const double ratio = rec.normalized_variance / rec.analytic_asv;
    pass = pass && ratio >= 2.0;
    detail += fmt("%s inflation %.1fx; ", sr.name.c_str(), ratio);
  }
  return {pass, detail};
}

// 3. closed-form optima against a 10^6-point grid
Outcome omega_star_oracle() {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  int cases = 0;
  for (int i = 0; i < 50; ++i) {
    const double s = std::pow(10.0, -2.0 + 3.0 * u01(rng));
    const double v = 0.25 + 3.75 * u01(rng);
    const double tr = 4.0 + 46.0 * u01(rng);
    const double wmax = 2.0 * kPi / tr;
    const OmegaStar stars[] = {omega_star_gaussian(v, s, tr), omega_star_cauchy(v, s, tr),
                               omega_star_laplace(v, s, tr), omega_star_uniform(v, s, tr)};
    const std::function<double(double)> curves[] = {
        [&](double w) { return asv_gaussian(v, s, w); }, [&](double w) { return asv_cauchy(v, s, w); },
        [&](double w) { return asv_laplace(v, s, w); },
        [&](double w) {
          const double x = w * std::sqrt(3.0 * v);
          return std::abs(std::sin(x)) < 1e-12 ? INFINITY : asv_uniform(v, s, w);
        }};
    for (int k = 0; k < 4; ++k) {
      constexpr int kGrid = 1000000;
      double best = INFINITY, arg = 0.0;
      for (int j = 1; j <= kGrid; ++j) {
        const double w = wmax * j / kGrid;
        const double val = curves[k](w);
        if (val < best) {
          best = val;
          arg = w;
        }
      }
      worst = std::max(worst, std::abs(stars[k].omega - arg));
      ++cases;
    }
  }
  return {worst <= 1e-4, fmt("%d optima, max |dw| = %.2e", cases, worst)};
}

// 4. kurtosis expansion coefficients
Outcome kurtosis_expansion() {
  const double w = 0.01;
  const double lap = (asv_laplace(1.0, 0.0, w) - 1.0) / (w * w);
  const double uni = (asv_uniform(1.0, 0.0, w) - 1.0) / (w * w);
  const bool pass = std::abs(lap + 1.0) <= 0.02 && std::abs(uni - 0.4) / 0.4 <= 0.02;
  return {pass, fmt("laplace %.6f (want -1), uniform %.6f (want 0.4)", lap, uni)};
}

// 5. distribution-free upper bound
Outcome upper_bound() {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int triples = 0, violations = 0;
  double tightest = INFINITY;
  while (triples < 100) {
    const double v = 0.25 + 3.75 * u01(rng);
    const double s = std::pow(10.0, -2.0 + 3.0 * u01(rng));
    const double tr = 4.0 + 46.0 * u01(rng);
    const double wmax = 2.0 * kPi / tr;
    if (wmax * wmax * v >= 2.0) continue;
    ++triples;
    const double bound = asv_upper_bound(v, s, tr);
    const NoiseModel models[] = {NoiseModel::gaussian(v), NoiseModel::laplace(v), NoiseModel::uniform(v)};
    for (const auto& m : models) {
      double best = INFINITY;
      for (int j = 1; j <= 10000; ++j) {
        try {
          best = std::min(best, asv(m, s, wmax * j / 10000.0));
        } catch (const Error&) {
        }
      }
      if (bound < best) ++violations;
      tightest = std::min(tightest, bound / best);
    }
  }
  return {violations == 0, fmt("%d triples x 3 laws, %d violations, min bound/min AsV = %.4f", triples,
                               violations, tightest)};
}

// 6. amplify-and-forward: level and flatness in L
Outcome af_asymptotics() {
  ExperimentSpec spec;
  spec.name = "c6";
  spec.kind = ExperimentKind::AfCompare;
  spec.network = total_power_network(500);
  spec.network.noise = NoiseModel::gaussian(1.0);
  spec.sweep_variable = SweepVariable::Sensors;
  spec.sweep = {500};
  spec.series = {series("af", NoiseModel::gaussian(1.0), Scheme::AmplifyForward)};
  spec.trials = 200000;
  spec.seed = 606;
  const auto level = run_experiment(spec).series[0].records[0];
  const double rel = std::abs(level.normalized_variance - 1.25) / 1.25;

  spec.sweep = {50, 100, 200, 500, 1000, 2000, 5000};
  spec.trials = 20000;
  spec.seed = 607;
  const auto recs = run_experiment(spec).series[0].records;
  // weighted least squares of L var on L
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : recs) {
    const double w = 1.0 / (r.std_error * r.std_error);
    sw += w;
    sx += w * r.sweep_value;
    sy += w * r.normalized_variance;
    sxx += w * r.sweep_value * r.sweep_value;
    sxy += w * r.sweep_value * r.normalized_variance;
  }
  const double det = sw * sxx - sx * sx;
  const double slope = (sw * sxy - sx * sy) / det;
  const double slope_se = std::sqrt(sw / det);
  const double t = slope / slope_se;
  return {rel <= 0.05 && std::abs(t) < 3.0,
          fmt("L var at L=500 = %.4f (want 1.25, rel %.4f); slope %.2e +- %.2e (t = %.2f)",
              level.normalized_variance, rel, slope, slope_se, t)};
}

// 7. fading penalty ratios
Outcome fading_penalty_ratio() {
  ExperimentSpec spec;
  spec.name = "c7";
  spec.network = total_power_network(1000);
  spec.omega = OmegaChoice{true, 0.0};
  spec.sweep_variable = SweepVariable::Sensors;
  spec.sweep = {1000};
  SeriesSpec none = series("none", NoiseModel::gaussian(1.0));
  none.fading = NoFading{};
  SeriesSpec ray = series("rayleigh", NoiseModel::gaussian(1.0));
  ray.fading = RayleighFading{};
  SeriesSpec rice = series("ricean", NoiseModel::gaussian(1.0));
  rice.fading = RiceanFading{5.0};
  spec.series = {none, ray, rice};
  spec.trials = 100000;
  spec.seed = 707;
  const auto r = run_experiment(spec);
  const double base = r.series[0].records[0].normalized_variance;
  const double ray_ratio = r.series[1].records[0].normalized_variance / base;
  const double rice_ratio = r.series[2].records[0].normalized_variance / base;
  const double ray_want = 4.0 / kPi;
  const double rice_want = specfun::ricean_fading_penalty(5.0);
  const double e1 = std::abs(ray_ratio - ray_want) / ray_want;
  const double e2 = std::abs(rice_ratio - rice_want) / rice_want;
  return {e1 <= 0.03 && e2 <= 0.03, fmt("rayleigh %.4f (want %.4f), ricean K=5 %.4f (want %.4f)", ray_ratio,
                                        ray_want, rice_ratio, rice_want)};
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
  }
  return d;
}

// 8. Cauchy: CM consistent, AF stuck at the sensing-noise law
Outcome cauchy_robustness() {
  ExperimentSpec spec;
  spec.name = "c8";
  spec.kind = ExperimentKind::CauchyRobustness;
  spec.network = total_power_network(100);
  spec.network.noise = NoiseModel::cauchy(1.0);
  spec.omega = OmegaChoice{true, 0.0};
  spec.sweep_variable = SweepVariable::Sensors;
  spec.sweep = {100, 1000, 10000};
  spec.series = {series("cm", NoiseModel::cauchy(1.0))};
  spec.trials = 1000;
  spec.seed = 808;
  const auto cm = run_experiment(spec).series[0].records;
  bool decreasing = true;
  for (std::size_t i = 1; i < cm.size(); ++i)
    decreasing = decreasing && cm[i].median_abs_error < cm[i - 1].median_abs_error;

  auto af_errors = [](std::size_t sensors, std::uint64_t point) {
    NetworkConfig n = total_power_network(sensors);
    n.noise = NoiseModel::cauchy(1.0);
    const double alpha = af_gain(10.0, sensors, n.theta, 1.0);
    std::vector<double> e(1000);
    for (std::size_t t = 0; t < e.size(); ++t) {
      Stream rng = make_stream(809, 1, point, t);
      e[t] = estimate_af(simulate_af_snapshot(n, 1.0, rng), alpha) - n.theta;
    }
    return e;
  };
  const auto small = af_errors(100, 0);
  const auto large = af_errors(10000, 2);
  const double d = ks_statistic(small, large);
  const double n = 1000.0;
  const double critical = 1.628 * std::sqrt((n + n) / (n * n));
  return {decreasing && d < critical,
          fmt("CM median |err| %.4f > %.4f > %.4f; AF KS D = %.4f (1%% critical %.4f)", cm[0].median_abs_error,
              cm[1].median_abs_error, cm[2].median_abs_error, d, critical)};
}

// 9. covariance identity and Monte Carlo covariance of the channel output
Outcome covariance_identity() {
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double v = 0.25 + 3.75 * u01(rng);
    const double pt = 0.5 + 20.0 * u01(rng);
    const double sv = 2.0 * u01(rng);
    const double tr = 4.0 + 46.0 * u01(rng);
    const double w = (0.05 + 0.95 * u01(rng)) * 2.0 * kPi / tr;
    const double theta = tr * u01(rng);
    const NoiseModel models[] = {NoiseModel::gaussian(v), NoiseModel::laplace(v), NoiseModel::uniform(v),
                                 NoiseModel::cauchy(v), NoiseModel::class_a(0.5, 0.1, v)};
    for (const auto& m : models) {
      try {
        const double want = asv(m, sv / pt, w);
        const double got = appendix_covariance(m, w, theta, pt, sv).composite();
        worst = std::max(worst, std::abs(got - want) / want);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CfZero) throw;
      }
    }
  }

  NetworkConfig n = total_power_network(2000);
  n.omega = 0.5;
  n.theta = kPi / 4.0 / n.omega;
  const auto terms = appendix_covariance(n.noise, n.omega, n.theta, 10.0, 1.0);
  const int trials = 50000;
  TrialAccumulator re, im, sum;
  for (int t = 0; t < trials; ++t) {
    Stream s = make_stream(910, 0, 0, t);
    const auto y = simulate_cm_snapshot(n, s).y;
    re.add(y.real());
    im.add(y.imag());
    sum.add(y.real() + y.imag());
  }
  const double s11 = re.variance(), s22 = im.variance();
  const double s12 = (sum.variance() - s11 - s22) / 2.0;
  const double e11 = std::abs(s11 - terms.sigma11) / terms.sigma11;
  const double e22 = std::abs(s22 - terms.sigma22) / terms.sigma22;
  const double e12 = std::abs(s12 - terms.sigma12) / std::abs(terms.sigma12);
  const bool pass = worst <= 1e-10 && e11 <= 0.05 && e22 <= 0.05 && e12 <= 0.05;
  return {pass, fmt("composite max rel err %.2e; MC S11 %.4f/%.4f S12 %.4f/%.4f S22 %.4f/%.4f", worst, s11,
                    terms.sigma11, s12, terms.sigma12, s22, terms.sigma22)};
}

double hyp1f1_reference(double a, double b, double x) {
  using big = boost::multiprecision::cpp_dec_float_50;
  big term = 1, sum = 1;
  const big A = a, B = b, X = x;
  for (int n = 0; n < 2000; ++n) {
    term *= (A + n) / (B + n) * X / (n + 1);
    sum += term;
    if (abs(term) < abs(sum) * big("1e-40")) break;
  }
  return static_cast<double>(sum);
}

// 10. special functions
Outcome special_functions() {
  double w_worst = 0.0;
  const double lo = -1.0 / std::numbers::e;
  for (int i = 0; i <= 100000; ++i) {
    const double x = lo + (10.0 - lo) * i / 100000.0;
    const double w = specfun::lambert_w0(x);
    w_worst = std::max(w_worst, std::abs(w * std::exp(w) - x) / std::max(1.0, std::abs(x)));
  }
  const double ricean = std::abs(specfun::ricean_fading_penalty(0.0) - 4.0 / kPi) / (4.0 / kPi);
  double h_worst = 0.0;
  for (double a : {-2.5, -0.5, 0.5, 1.5, 3.0})
    for (double b : {0.5, 1.0, 2.5, 6.0})
      for (double x = -50.0; x <= 50.0; x += 1.25) {
        const double want = hyp1f1_reference(a, b, x);
        h_worst = std::max(h_worst, std::abs(specfun::hyp1f1(a, b, x) - want) / std::max(1.0, std::abs(want)));
      }
  return {w_worst <= 1e-12 && ricean <= 1e-10 && h_worst <= 1e-10,
          fmt("lambert identity %.2e, ricean(0) rel %.2e, 1F1 rel %.2e", w_worst, ricean, h_worst)};
}

// 11. non-identically distributed sensing noise
Outcome heterogeneous_consistency() {
  ExperimentSpec spec;
  spec.name = "c11";
  spec.kind = ExperimentKind::HeterogeneousConsistency;
  spec.network = total_power_network(100);
  spec.network.omega = 2.0 * kPi / 12.0;
  spec.omega = OmegaChoice{false, 2.0 * kPi / 12.0};
  spec.sweep_variable = SweepVariable::Sensors;
  spec.sweep = {100, 10000};
  const auto g = NoiseModel::gaussian(1.0);
  spec.series = {series("bounded", NoiseModel::heterogeneous(g, ScaleRule::Bounded, 1.0)),
                 series("linear-growth", NoiseModel::heterogeneous(g, ScaleRule::LinearGrowth, 1.0))};
  spec.trials = 1000;
  spec.seed = 1111;
  const auto r = run_experiment(spec);
  const double bounded = r.series[0].records[1].mse;
  const double grow_small = r.series[1].records[0].mse;
  const double grow_large = r.series[1].records[1].mse;
  return {bounded < 0.05 && grow_large > 0.5 * grow_small,
          fmt("bounded MSE(L=1e4) = %.2e; linear-growth MSE %.3f (L=1e2) -> %.3f (L=1e4)", bounded, grow_small,
              grow_large)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"analytic vs simulation, total power", analytic_vs_simulation_total},
      {"analytic vs simulation, per-sensor power", analytic_vs_simulation_per_sensor},
      {"optimal omega vs grid argmin", omega_star_oracle},
      {"kurtosis expansion", kurtosis_expansion},
      {"AsV upper bound", upper_bound},
      {"AF asymptotics", af_asymptotics},
      {"fading penalty", fading_penalty_ratio},
      {"Cauchy robustness", cauchy_robustness},
      {"covariance identity", covariance_identity},
      {"special functions", special_functions},
      {"heterogeneous consistency", heterogeneous_consistency},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
