// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include "cmest/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cmest/error.hpp"

namespace cmest {
namespace {

std::complex<double> channel_noise(double variance, std::normal_distribution<double>& normal,
                                   Stream& rng) {
  if (variance == 0.0) return {0.0, 0.0};
  const double sd = std::sqrt(variance / 2.0);
  const double re = sd * normal(rng);
  const double im = sd * normal(rng);
  return {re, im};
}

void require_af_supported(const NetworkConfig& config) {
  if (!is_total(config.power))
    fail(ErrorKind::Unsupported, "amplify-and-forward is only defined under a total power constraint");
  if (!std::holds_alternative<NoFading>(config.fading))
    fail(ErrorKind::Unsupported, "amplify-and-forward with fading is not supported");
}

}  // namespace

double per_sensor_power(const PowerMode& power, std::size_t sensors) {
  if (const auto* p = std::get_if<PerSensorPower>(&power)) return p->rho;
  return std::get<TotalPower>(power).total / static_cast<double>(sensors);
}

bool is_total(const PowerMode& power) { return std::holds_alternative<TotalPower>(power); }

FadingSampler::FadingSampler(const FadingModel& model) : los_(1.0), scatter_(0.0), none_(false) {
  if (std::holds_alternative<NoFading>(model)) {
    none_ = true;
  } else if (std::holds_alternative<RayleighFading>(model)) {
    los_ = 0.0;
    scatter_ = std::sqrt(0.5);
  } else {
    const double k = std::get<RiceanFading>(model).k_factor;
    if (!(k >= 0.0)) fail(ErrorKind::Config, "Ricean K must be >= 0");
    los_ = std::sqrt(k / (k + 1.0));
    scatter_ = std::sqrt(0.5 / (k + 1.0));
  }
}

double FadingSampler::operator()(Stream& rng) {
  if (none_) return 1.0;
  const double re = los_ + scatter_ * normal_(rng);
  const double im = scatter_ * normal_(rng);
  return std::hypot(re, im);
}

void NetworkConfig::validate() const {
  constexpr double kTol = 1e-12;
  if (sensors < 1) fail(ErrorKind::Config, "sensor count must be >= 1");
  if (!(theta_range > 0.0)) fail(ErrorKind::Config, "theta_range must be > 0");
  if (!(theta >= 0.0 && theta <= theta_range))
    fail(ErrorKind::Config, "theta must lie in [0, theta_range]");
  const double omega_max = 2.0 * std::numbers::pi / theta_range;
  if (!(omega > 0.0 && omega <= omega_max * (1.0 + kTol)))
    fail(ErrorKind::Config, "omega must lie in (0, 2*pi/theta_range], got " + std::to_string(omega));
  if (!(channel_noise_variance >= 0.0)) fail(ErrorKind::Config, "channel noise variance must be >= 0");
  if (const auto* p = std::get_if<PerSensorPower>(&power); p && !(p->rho > 0.0))
    fail(ErrorKind::Config, "per-sensor power must be > 0");
  if (const auto* p = std::get_if<TotalPower>(&power); p && !(p->total > 0.0))
    fail(ErrorKind::Config, "total power must be > 0");
  if (const auto* r = std::get_if<RiceanFading>(&fading); r && !(r->k_factor >= 0.0))
    fail(ErrorKind::Config, "Ricean K must be >= 0");
}

std::complex<double> cm_symbol(double rho, double omega, double x) {
  const double phase = omega * x;
  return std::sqrt(rho) * std::complex<double>(std::cos(phase), std::sin(phase));
}

double af_gain(double total_power, std::size_t sensors, double theta, double nominal_variance) {
  if (!(total_power > 0.0)) fail(ErrorKind::Config, "AF total power must be > 0");
  if (!(nominal_variance >= 0.0)) fail(ErrorKind::Config, "AF nominal variance must be >= 0");
  const double mean_square = theta * theta + nominal_variance;
  if (!(mean_square > 0.0)) fail(ErrorKind::Config, "AF gain undefined for zero signal power");
  return std::sqrt(total_power / (static_cast<double>(sensors) * mean_square));
}

Snapshot simulate_cm_snapshot(const NetworkConfig& config, Stream& rng) {
  config.validate();
  NoiseSampler noise(config.noise);
  FadingSampler fading(config.fading);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double rho = per_sensor_power(config.power, config.sensors);
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 1; i <= config.sensors; ++i) {
    const double phase = config.omega * (config.theta + noise(i, rng));
    const double gain = fading(rng);
    re += gain * std::cos(phase);
    im += gain * std::sin(phase);
  }
  const std::complex<double> y =
      std::sqrt(rho) * std::complex<double>(re, im) +
      channel_noise(config.channel_noise_variance, normal, rng);
  return {y, config.sensors, config.power, config.omega};
}

Snapshot simulate_cm_snapshot(const NetworkConfig& config, std::span<const double> sensing_noise,
                              Stream& rng) {
  config.validate();
  if (sensing_noise.size() != config.sensors)
    fail(ErrorKind::Config, "sensing noise draw count must equal the sensor count");
  FadingSampler fading(config.fading);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double rho = per_sensor_power(config.power, config.sensors);
  std::complex<double> sum{0.0, 0.0};
  for (double eta : sensing_noise) sum += fading(rng) * cm_symbol(rho, config.omega, config.theta + eta);
  return {sum + channel_noise(config.channel_noise_variance, normal, rng), config.sensors,
          config.power, config.omega};
}

Snapshot simulate_af_snapshot(const NetworkConfig& config, double nominal_variance, Stream& rng) {
  config.validate();
  require_af_supported(config);
  NoiseSampler noise(config.noise);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double alpha = af_gain(std::get<TotalPower>(config.power).total, config.sensors,
                               config.theta, nominal_variance);
  double sum = 0.0;
  for (std::size_t i = 1; i <= config.sensors; ++i) sum += config.theta + noise(i, rng);
  const std::complex<double> y =
      alpha * sum + channel_noise(config.channel_noise_variance, normal, rng);
  return {y, config.sensors, config.power, config.omega};
}

Snapshot simulate_af_snapshot(const NetworkConfig& config, double nominal_variance,
                              std::span<const double> sensing_noise, Stream& rng) {
  config.validate();
  require_af_supported(config);
  if (sensing_noise.size() != config.sensors)
    fail(ErrorKind::Config, "sensing noise draw count must equal the sensor count");
  std::normal_distribution<double> normal(0.0, 1.0);
  const double alpha = af_gain(std::get<TotalPower>(config.power).total, config.sensors,
                               config.theta, nominal_variance);
  double sum = 0.0;
  for (double eta : sensing_noise) sum += config.theta + eta;
  return {alpha * sum + channel_noise(config.channel_noise_variance, normal, rng), config.sensors,
          config.power, config.omega};
}

}  // namespace cmest
