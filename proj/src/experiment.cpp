// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include "cmest/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "cmest/accumulator.hpp"
#include "cmest/asv.hpp"
#include "cmest/error.hpp"
#include "cmest/estimators.hpp"

namespace cmest {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kChunkTrials = 512;

double snr_inv_for(const NetworkConfig& net) {
  if (const auto* p = std::get_if<TotalPower>(&net.power)) return net.channel_noise_variance / p->total;
  return 0.0;  // per-sensor power: channel noise vanishes asymptotically
}

bool has_variance(const NoiseModel& noise) {
  return noise.is_identically_distributed() && !noise.as<CauchyNoise>();
}

struct ChunkOutcome {
  TrialAccumulator acc;
  std::uint64_t degenerate = 0;
};

struct PointOutcome {
  TrialAccumulator acc;
  std::uint64_t degenerate = 0;
  std::vector<double> errors;  // per trial; NaN marks a degenerate trial
};

double run_trial(const NetworkConfig& net, Scheme scheme, double nominal_variance, Stream& rng) {
  if (scheme == Scheme::AmplifyForward) {
    const Snapshot snap = simulate_af_snapshot(net, nominal_variance, rng);
    const double alpha =
        af_gain(std::get<TotalPower>(net.power).total, net.sensors, net.theta, nominal_variance);
    return estimate_af(snap, alpha) - net.theta;
  }
  const Snapshot snap = simulate_cm_snapshot(net, rng);
  return estimate_cm(snap, net.omega, net.power).value - net.theta;
}

PointOutcome simulate_point(const NetworkConfig& net, Scheme scheme, double nominal_variance,
                            std::uint64_t trials, std::uint64_t seed, std::uint64_t series_index,
                            std::uint64_t point_index, unsigned threads) {
  const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<ChunkOutcome> outcomes(chunks);
  PointOutcome out;
  out.errors.assign(trials, kNaN);

  auto run_chunk = [&](std::uint64_t c) {
    ChunkOutcome& o = outcomes[c];
    const std::uint64_t end = std::min(trials, (c + 1) * kChunkTrials);
    for (std::uint64_t t = c * kChunkTrials; t < end; ++t) {
      Stream rng = make_stream(seed, series_index, point_index, t);
      try {
        const double err = run_trial(net, scheme, nominal_variance, rng);
        o.acc.add(err);
        out.errors[t] = err;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Degenerate) throw;
        ++o.degenerate;
      }
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
          try {
            run_chunk(c);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = chunks;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // merge in chunk order so the reduction tree is independent of scheduling
  for (const auto& o : outcomes) {
    out.acc.merge(o.acc);
    out.degenerate += o.degenerate;
  }
  return out;
}

double median_abs(const std::vector<double>& errors) {
  std::vector<double> a;
  a.reserve(errors.size());
  for (double e : errors)
    if (!std::isnan(e)) a.push_back(std::abs(e));
  if (a.empty()) return kNaN;
  const std::size_t mid = a.size() / 2;
  std::nth_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(mid), a.end());
  const double upper = a[mid];
  if (a.size() % 2 == 1) return upper;
  const double lower = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

std::string_view kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::AsvVsOmega: return "asv-vs-omega";
    case ExperimentKind::VarVsL: return "var-vs-L";
    case ExperimentKind::FadingCompare: return "fading-compare";
    case ExperimentKind::AfCompare: return "af-compare";
    case ExperimentKind::CauchyRobustness: return "cauchy-robustness";
    case ExperimentKind::HeterogeneousConsistency: return "heterogeneous-consistency";
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_kind(std::string_view name) {
  for (auto k : {ExperimentKind::AsvVsOmega, ExperimentKind::VarVsL, ExperimentKind::FadingCompare,
                 ExperimentKind::AfCompare, ExperimentKind::CauchyRobustness,
                 ExperimentKind::HeterogeneousConsistency})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

std::string_view sweep_variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::Omega: return "omega";
    case SweepVariable::Sensors: return "sensors";
    case SweepVariable::Theta: return "theta";
  }
  return "unknown";
}

std::vector<SeriesSpec> effective_series(const ExperimentSpec& spec) {
  if (!spec.series.empty()) return spec.series;
  auto named = [](std::string name) {
    SeriesSpec s;
    s.name = std::move(name);
    return s;
  };
  switch (spec.kind) {
    case ExperimentKind::AfCompare:
    case ExperimentKind::CauchyRobustness: {
      SeriesSpec af = named("af");
      af.scheme = Scheme::AmplifyForward;
      return {named("cm"), af};
    }
    case ExperimentKind::FadingCompare: {
      SeriesSpec none = named("none");
      none.fading = NoFading{};
      SeriesSpec rayleigh = named("rayleigh");
      rayleigh.fading = RayleighFading{};
      return {none, rayleigh};
    }
    case ExperimentKind::HeterogeneousConsistency: {
      if (!spec.network.noise.is_identically_distributed()) return {named(spec.network.noise.name())};
      SeriesSpec growth = named("linear-growth");
      growth.noise = NoiseModel::heterogeneous(spec.network.noise, ScaleRule::LinearGrowth, 1.0);
      SeriesSpec bounded = named("bounded");
      bounded.noise = NoiseModel::heterogeneous(spec.network.noise, ScaleRule::Bounded, 1.0);
      return {growth, bounded};
    }
    default:
      return {named(spec.network.noise.name())};
  }
}

NetworkConfig resolve_network(const ExperimentSpec& spec, const SeriesSpec& series, double sweep_value) {
  NetworkConfig net = spec.network;
  if (series.noise) net.noise = *series.noise;
  if (series.fading) net.fading = *series.fading;
  if (series.power) net.power = *series.power;
  if (series.sensors) net.sensors = *series.sensors;
  if (series.theta) net.theta = *series.theta;
  OmegaChoice choice = series.omega.value_or(spec.omega);

  switch (spec.sweep_variable) {
    case SweepVariable::Omega:
      choice = OmegaChoice{false, sweep_value};
      break;
    case SweepVariable::Sensors:
      if (!(sweep_value >= 1.0)) fail(ErrorKind::Config, "sensor sweep values must be >= 1");
      net.sensors = static_cast<std::size_t>(std::llround(sweep_value));
      break;
    case SweepVariable::Theta:
      net.theta = sweep_value;
      break;
  }

  if (choice.optimal) {
    if (series.scheme == Scheme::AmplifyForward) {
      // AF ignores omega; any valid value keeps the config consistent
      net.omega = 2.0 * 3.14159265358979323846 / net.theta_range;
    } else {
      if (!net.noise.is_identically_distributed())
        fail(ErrorKind::Config, "omega \"optimal\" needs identically distributed noise; give omega explicitly");
      net.omega = omega_star(net.noise, snr_inv_for(net), net.theta_range).omega;
    }
  } else {
    net.omega = choice.value;
  }
  net.validate();
  return net;
}

double analytic_asv_for(const NetworkConfig& net, Scheme scheme) {
  if (scheme == Scheme::AmplifyForward) {
    if (!has_variance(net.noise) || !is_total(net.power)) return kNaN;
    return asv_af(net.theta, variance(net.noise), snr_inv_for(net));
  }
  if (!net.noise.is_identically_distributed()) return kNaN;
  try {
    return asv_generic(AsvContext{net.noise, snr_inv_for(net), fading_penalty(net.fading)}, net.omega);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CfZero) throw;
    return kNaN;
  }
}

void ExperimentSpec::validate() const {
  if (trials < 1) fail(ErrorKind::Config, "trials must be >= 1");
  if (sweep.empty()) fail(ErrorKind::Config, "sweep must not be empty");
  if (!(af_nominal_variance >= 0.0)) fail(ErrorKind::Config, "af_nominal_variance must be >= 0");
  if (!(check_tolerance > 0.0)) fail(ErrorKind::Config, "check_tolerance must be > 0");
  for (const auto& s : effective_series(*this)) {
    if (s.scheme == Scheme::AmplifyForward) {
      NetworkConfig probe = network;
      if (s.power) probe.power = *s.power;
      if (s.fading) probe.fading = *s.fading;
      if (!is_total(probe.power)) fail(ErrorKind::Config, "series '" + s.name + "': AF needs total power");
      if (!std::holds_alternative<NoFading>(probe.fading))
        fail(ErrorKind::Config, "series '" + s.name + "': AF does not support fading");
    }
    for (double v : sweep) (void)resolve_network(*this, s, v);
  }
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  spec.validate();
  const unsigned threads = resolve_threads(spec.threads);

  ExperimentResult result;
  result.metadata.seed = spec.seed;
  result.metadata.kind = std::string(kind_name(spec.kind));
  result.metadata.name = spec.name;
  result.metadata.config_echo = spec.config_echo;
  result.metadata.threads = threads;

  const auto series = effective_series(spec);
  for (std::size_t si = 0; si < series.size(); ++si) {
    const SeriesSpec& s = series[si];
    SeriesResult sr;
    sr.name = s.name;
    sr.scheme = s.scheme;
    for (std::size_t pi = 0; pi < spec.sweep.size(); ++pi) {
      const NetworkConfig net = resolve_network(spec, s, spec.sweep[pi]);
      if (s.scheme == Scheme::AmplifyForward && !has_variance(net.noise)) sr.nonconvergent = true;
      const PointOutcome po = simulate_point(net, s.scheme, spec.af_nominal_variance, spec.trials,
                                             spec.seed, si, pi, threads);
      const double sensors = static_cast<double>(net.sensors);
      Record r;
      r.sweep_value = spec.sweep[pi];
      r.n_trials = po.acc.count();
      r.normalized_variance = sensors * po.acc.variance();
      r.std_error = sensors * po.acc.variance_std_error();
      r.analytic_asv = analytic_asv_for(net, s.scheme);
      r.bias = r.n_trials > 0 ? po.acc.mean() : kNaN;
      r.mse = po.acc.mean_square();
      r.median_abs_error = median_abs(po.errors);
      r.first_error = po.errors.empty() ? kNaN : po.errors.front();
      r.kurtosis = po.acc.kurtosis();
      r.degenerate_events = po.degenerate;
      r.omega = net.omega;
      r.sensors = net.sensors;
      sr.records.push_back(r);
    }
    result.series.push_back(std::move(sr));
  }
  result.metadata.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ExperimentResult run_af_compare(ExperimentSpec spec) {
  spec.kind = ExperimentKind::AfCompare;
  return run_experiment(spec);
}

ExperimentResult run_cauchy_robustness(ExperimentSpec spec) {
  spec.kind = ExperimentKind::CauchyRobustness;
  return run_experiment(spec);
}

ExperimentResult run_heterogeneous_consistency(ExperimentSpec spec) {
  spec.kind = ExperimentKind::HeterogeneousConsistency;
  return run_experiment(spec);
}

ExperimentResult analytic_curves(const ExperimentSpec& spec) {
  ExperimentResult result;
  result.metadata.seed = spec.seed;
  result.metadata.kind = std::string(kind_name(spec.kind));
  result.metadata.name = spec.name;
  result.metadata.config_echo = spec.config_echo;

  for (const SeriesSpec& s : effective_series(spec)) {
    SeriesResult sr;
    sr.name = s.name;
    sr.scheme = s.scheme;
    auto make_record = [](double omega, double asv, const NetworkConfig& net) {
      Record r;
      r.sweep_value = omega;
      r.n_trials = 0;
      r.normalized_variance = r.std_error = r.bias = r.mse = kNaN;
      r.median_abs_error = r.first_error = r.kurtosis = kNaN;
      r.analytic_asv = asv;
      r.omega = omega;
      r.sensors = net.sensors;
      return r;
    };
    if (spec.sweep_variable == SweepVariable::Omega) {
      for (double omega : spec.sweep) {
        const NetworkConfig net = resolve_network(spec, s, omega);
        sr.records.push_back(make_record(omega, analytic_asv_for(net, s.scheme), net));
      }
    } else {
      ExperimentSpec omega_spec = spec;
      omega_spec.sweep_variable = SweepVariable::Omega;
      const double omega_max = 2.0 * 3.14159265358979323846 / spec.network.theta_range;
      NetworkConfig net = resolve_network(omega_spec, s, omega_max);
      if (s.scheme == Scheme::AmplifyForward || !net.noise.is_identically_distributed()) {
        sr.records.push_back(make_record(omega_max, analytic_asv_for(net, s.scheme), net));
      } else {
        const AsvCurve curve = asv_curve(
            AsvContext{net.noise, snr_inv_for(net), fading_penalty(net.fading)}, net.theta_range);
        for (std::size_t i = 0; i < curve.omegas.size(); ++i)
          sr.records.push_back(make_record(curve.omegas[i], curve.values[i], net));
      }
    }
    result.series.push_back(std::move(sr));
  }
  return result;
}

std::vector<std::pair<std::string, OmegaStar>> optimize_series(const ExperimentSpec& spec) {
  std::vector<std::pair<std::string, OmegaStar>> out;
  for (const SeriesSpec& s : effective_series(spec)) {
    if (s.scheme == Scheme::AmplifyForward) continue;
    NetworkConfig net = spec.network;
    if (s.noise) net.noise = *s.noise;
    if (s.power) net.power = *s.power;
    if (!net.noise.is_identically_distributed())
      fail(ErrorKind::Config, "series '" + s.name + "': cannot optimize omega for heterogeneous noise");
    out.emplace_back(s.name, omega_star(net.noise, snr_inv_for(net), net.theta_range));
  }
  return out;
}

std::vector<CheckFailure> check_against_analytic(const ExperimentResult& result, double tolerance) {
  std::vector<CheckFailure> failures;
  for (const auto& s : result.series) {
    if (s.nonconvergent) continue;
    for (const auto& r : s.records) {
      if (!std::isfinite(r.analytic_asv) || r.n_trials == 0) continue;
      const double rel = std::abs(r.normalized_variance - r.analytic_asv) / r.analytic_asv;
      if (!(rel <= tolerance)) failures.push_back({s.name, r.sweep_value, r.normalized_variance, r.analytic_asv});
    }
  }
  return failures;
}

}  // namespace cmest
