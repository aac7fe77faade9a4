// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmest/channel.hpp"
#include "cmest/noise.hpp"
#include "cmest/optimize.hpp"

namespace cmest {

inline constexpr std::string_view kVersion = "0.1.0";

enum class ExperimentKind {
  AsvVsOmega,
  VarVsL,
  FadingCompare,
  AfCompare,
  CauchyRobustness,
  HeterogeneousConsistency,
};

std::string_view kind_name(ExperimentKind kind);
std::optional<ExperimentKind> parse_kind(std::string_view name);

enum class SweepVariable { Omega, Sensors, Theta };
std::string_view sweep_variable_name(SweepVariable v);

enum class Scheme { ConstantModulus, AmplifyForward };

/// Either a fixed transmit phase or the AsV minimizer of the series' noise.
struct OmegaChoice {
  bool optimal = false;
  double value = 1.0;
};

/// Per-series overrides applied on top of the network template.
struct SeriesSpec {
  std::string name;
  Scheme scheme = Scheme::ConstantModulus;
  std::optional<NoiseModel> noise;
  std::optional<FadingModel> fading;
  std::optional<PowerMode> power;
  std::optional<std::size_t> sensors;
  std::optional<double> theta;
  std::optional<OmegaChoice> omega;
};

struct ExperimentSpec {
  std::string name;
  ExperimentKind kind = ExperimentKind::AsvVsOmega;
  NetworkConfig network;
  OmegaChoice omega{true, 0.0};
  SweepVariable sweep_variable = SweepVariable::Omega;
  std::vector<double> sweep;
  std::vector<SeriesSpec> series;  // empty: kind-specific defaults
  std::uint64_t trials = 200000;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
  double af_nominal_variance = 1.0;
  double check_tolerance = 0.05;
  std::string config_echo;  // normalized JSON text of the source config

  /// Throws Error{Config}.
  void validate() const;
};

struct Record {
  double sweep_value = 0.0;
  std::uint64_t n_trials = 0;
  double normalized_variance = 0.0;  // L * var(theta_hat - theta)
  double std_error = 0.0;            // of normalized_variance
  double analytic_asv = 0.0;         // NaN when no closed-form AsV applies
  double bias = 0.0;                 // mean(theta_hat - theta)
  double mse = 0.0;                  // mean((theta_hat - theta)^2)
  double median_abs_error = 0.0;
  double first_error = 0.0;          // error of trial 0 (single-realization trace)
  double kurtosis = 0.0;             // sample kurtosis of the errors
  std::uint64_t degenerate_events = 0;
  double omega = 0.0;
  std::size_t sensors = 0;
};

struct SeriesResult {
  std::string name;
  Scheme scheme = Scheme::ConstantModulus;
  bool nonconvergent = false;  // variance statistics are not meaningful (infinite-variance errors)
  std::vector<Record> records;
};

struct ResultMetadata {
  std::uint64_t seed = 0;
  std::string kind;
  std::string name;
  std::string config_echo;
  std::string version{kVersion};
  unsigned threads = 1;
  double wall_time_seconds = 0.0;
};

struct ExperimentResult {
  std::vector<SeriesResult> series;
  ResultMetadata metadata;
};

/// Series actually run for a spec (explicit ones, or the kind's defaults).
std::vector<SeriesSpec> effective_series(const ExperimentSpec& spec);

/// Network configuration for one (series, sweep point), omega resolved.
NetworkConfig resolve_network(const ExperimentSpec& spec, const SeriesSpec& series, double sweep_value);

/// Analytic AsV matching a resolved configuration; NaN if undefined.
double analytic_asv_for(const NetworkConfig& network, Scheme scheme);

/// Monte Carlo over every (series, sweep point). Results are bit-identical
/// for identical specs regardless of spec.threads.
ExperimentResult run_experiment(const ExperimentSpec& spec);

ExperimentResult run_af_compare(ExperimentSpec spec);
ExperimentResult run_cauchy_robustness(ExperimentSpec spec);
ExperimentResult run_heterogeneous_consistency(ExperimentSpec spec);

/// AsV curves without simulation. Uses the omega sweep when the spec sweeps
/// omega, otherwise the default 2000-point log grid.
ExperimentResult analytic_curves(const ExperimentSpec& spec);

/// Optimal transmit phase per series.
std::vector<std::pair<std::string, OmegaStar>> optimize_series(const ExperimentSpec& spec);

struct CheckFailure {
  std::string series;
  double sweep_value;
  double simulated;
  double analytic;
};

/// Relative comparison of normalized variance against analytic AsV for every
/// record that has a finite analytic value.
std::vector<CheckFailure> check_against_analytic(const ExperimentResult& result, double tolerance);

}  // namespace cmest
