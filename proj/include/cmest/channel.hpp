// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <variant>

#include "cmest/noise.hpp"
#include "cmest/rng.hpp"

namespace cmest {

struct PerSensorPower {
  double rho;
};

/// Fixed total power split evenly: rho = total / L.
struct TotalPower {
  double total;
};

using PowerMode = std::variant<PerSensorPower, TotalPower>;

double per_sensor_power(const PowerMode& power, std::size_t sensors);
bool is_total(const PowerMode& power);

struct NoFading {};
struct RayleighFading {};
struct RiceanFading {
  double k_factor;
};

/// All fading models are normalized to E|h|^2 = 1; the sensor pre-corrects the
/// channel phase so only the envelope |h| reaches the fusion center.
using FadingModel = std::variant<NoFading, RayleighFading, RiceanFading>;

class FadingSampler {
 public:
  explicit FadingSampler(const FadingModel& model);
  double operator()(Stream& rng);

 private:
  double los_;      // line-of-sight amplitude
  double scatter_;  // per-component std of the diffuse part
  bool none_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

struct NetworkConfig {
  std::size_t sensors = 1;
  double theta = 0.0;
  double theta_range = 1.0;
  double omega = 1.0;
  PowerMode power = TotalPower{1.0};
  double channel_noise_variance = 0.0;
  FadingModel fading = NoFading{};
  NoiseModel noise = NoiseModel::gaussian(1.0);

  /// Throws Error{Config} when an invariant is broken.
  void validate() const;
};

struct Snapshot {
  std::complex<double> y;
  std::size_t sensors = 0;
  PowerMode power = TotalPower{1.0};
  double omega = 0.0;
};

/// Constant-modulus symbol sqrt(rho) e^{j omega x}.
std::complex<double> cm_symbol(double rho, double omega, double x);

/// Amplify-and-forward gain alpha_L meeting the average total-power constraint.
double af_gain(double total_power, std::size_t sensors, double theta, double nominal_variance);

Snapshot simulate_cm_snapshot(const NetworkConfig& config, Stream& rng);

/// Same as above with caller-supplied sensing-noise draws (size must equal L).
Snapshot simulate_cm_snapshot(const NetworkConfig& config, std::span<const double> sensing_noise,
                              Stream& rng);

/// AF under a total power constraint; no fading. nominal_variance stands in for
/// var(eta) when computing alpha_L (it may not exist, e.g. Cauchy).
Snapshot simulate_af_snapshot(const NetworkConfig& config, double nominal_variance, Stream& rng);

Snapshot simulate_af_snapshot(const NetworkConfig& config, double nominal_variance,
                              std::span<const double> sensing_noise, Stream& rng);

}  // namespace cmest
