// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include "cmest/asv.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cmest/error.hpp"
#include "cmest/specfun.hpp"

namespace cmest {
namespace {

constexpr double kCfZero = 1e-12;

void require_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) fail(ErrorKind::Domain, "AsV: omega must be > 0");
}

void require_snr(double snr_inv) {
  if (!(snr_inv >= 0.0)) fail(ErrorKind::Domain, "AsV: snr_inv must be >= 0");
}

void require_cf(double phi, double omega) {
  if (std::abs(phi) <= kCfZero)
    fail(ErrorKind::CfZero, "AsV undefined: characteristic function vanishes at omega = " +
                                std::to_string(omega));
}

}  // namespace

double asv_generic(const AsvContext& ctx, double omega) {
  require_omega(omega);
  require_snr(ctx.snr_inv);
  if (!(ctx.fading_penalty >= 1.0 - 1e-12)) fail(ErrorKind::Domain, "AsV: fading penalty must be >= 1");
  const double phi = cf(ctx.noise, omega);
  require_cf(phi, omega);
  const double numerator = ctx.snr_inv + one_minus_cf(ctx.noise, 2.0 * omega);
  return ctx.fading_penalty * numerator / (2.0 * omega * omega * phi * phi);
}

double asv_gaussian(double variance, double snr_inv, double omega) {
  require_omega(omega);
  require_snr(snr_inv);
  const double x = variance * omega * omega;
  return std::exp(x) / (2.0 * omega * omega) * (snr_inv - std::expm1(-2.0 * x));
}

double asv_cauchy(double scale, double snr_inv, double omega) {
  require_omega(omega);
  require_snr(snr_inv);
  const double x = 2.0 * scale * omega;
  return std::exp(x) / (2.0 * omega * omega) * (snr_inv - std::expm1(-x));
}

double asv_laplace(double variance, double snr_inv, double omega) {
  require_omega(omega);
  require_snr(snr_inv);
  const double b2 = variance / 2.0;
  const double beta = b2 * omega * omega;
  return b2 * (1.0 + beta) * (1.0 + beta) / (2.0 * beta) * (snr_inv + 4.0 * beta / (1.0 + 4.0 * beta));
}

double asv_uniform(double variance, double snr_inv, double omega) {
  require_omega(omega);
  require_snr(snr_inv);
  const double a = std::sqrt(3.0 * variance);
  const double x = omega * a;
  const double s = std::sin(x);
  require_cf(s / x, omega);
  return a * a / (2.0 * s * s) * (snr_inv + one_minus_sinc(2.0 * x));
}

double asv_class_a(double overlap, double background_ratio, double variance, double snr_inv,
                   double omega) {
  require_omega(omega);
  require_snr(snr_inv);
  const double m_half = class_a_mgf(-omega * omega / 2.0, overlap, background_ratio, variance);
  require_cf(m_half, omega);
  // 1 - M_X(-2 w^2) through the log-MGF to keep precision near the origin
  const double tp1 = background_ratio + 1.0;
  const double t = -2.0 * omega * omega;
  const double log_m2 =
      t * variance * background_ratio / tp1 + overlap * std::expm1(t * variance / (overlap * tp1));
  return (snr_inv - std::expm1(log_m2)) / (2.0 * omega * omega * m_half * m_half);
}

double asv_small_omega(double variance, double excess_kurtosis, double omega) {
  return variance - excess_kurtosis * variance * variance * omega * omega / 3.0;
}

double asv_upper_bound(double variance, double snr_inv, double theta_range) {
  if (!(variance > 0.0)) fail(ErrorKind::Domain, "asv_upper_bound: variance must be > 0");
  require_snr(snr_inv);
  if (!(theta_range > 0.0)) fail(ErrorKind::Domain, "asv_upper_bound: theta_range must be > 0");
  const double omega_max = 2.0 * std::numbers::pi / theta_range;
  const double beta_max = omega_max * omega_max * variance;
  if (!(beta_max < 2.0))
    fail(ErrorKind::AssumptionViolated,
         "asv_upper_bound requires (2 pi sigma / theta_range)^2 < 2");
  const double c = -3.0 * snr_inv + std::sqrt(snr_inv) * std::sqrt(32.0 + 9.0 * snr_inv);
  if (snr_inv > 0.0 && beta_max > c / 8.0) {
    // unconstrained minimizer beta = c / 8 of the CF-lower-bound objective
    const double shrink = 1.0 - c / 16.0;
    return variance * (4.0 * snr_inv + c) / (c * shrink * shrink);
  }
  const double shrink = 1.0 - beta_max / 2.0;
  return variance * (snr_inv + 2.0 * beta_max) / (2.0 * beta_max * shrink * shrink);
}

double asv_af(double theta, double variance, double snr_inv) {
  return variance + snr_inv / 2.0 * (theta * theta + variance);
}

double asv_low_snr_gaussian(double variance, double snr_inv) {
  return variance * std::numbers::e / 2.0 * (snr_inv - std::expm1(-2.0));
}

CovarianceTerms appendix_covariance(const NoiseModel& noise, double omega, double theta,
                                    double total_power, double channel_noise_variance,
                                    GradientForm form) {
  require_omega(omega);
  if (!(total_power > 0.0)) fail(ErrorKind::Domain, "appendix_covariance: total power must be > 0");
  if (!(channel_noise_variance >= 0.0))
    fail(ErrorKind::Domain, "appendix_covariance: channel noise variance must be >= 0");
  const double phi1 = cf(noise, omega);
  require_cf(phi1, omega);
  const double phi2 = cf(noise, 2.0 * omega);

  CovarianceTerms t{};
  t.v_s = one_minus_cf(noise, 2.0 * omega) / 2.0;
  t.v_c = 0.5 + phi2 / 2.0 - phi1 * phi1;
  const double c = std::cos(omega * theta);
  const double s = std::sin(omega * theta);
  t.sigma11 = total_power * (c * c * t.v_c + s * s * t.v_s) + channel_noise_variance / 2.0;
  t.sigma22 = total_power * (c * c * t.v_s + s * s * t.v_c) + channel_noise_variance / 2.0;
  t.sigma12 = total_power * s * c * (t.v_c - t.v_s);

  const double scale = omega * std::sqrt(total_power) * phi1;
  constexpr double kSingular = 1e-6;
  const bool near_singular = std::abs(c) < kSingular || std::abs(s) < kSingular;
  if (form == GradientForm::Tangent && near_singular)
    fail(ErrorKind::SingularAngle, "appendix_covariance: tan-based gradient singular at omega*theta = " +
                                       std::to_string(omega * theta));
  if (form == GradientForm::SinCos || (form == GradientForm::Auto && near_singular)) {
    t.g1 = -s / scale;
    t.g2 = c / scale;
  } else {
    const double tn = std::tan(omega * theta);
    t.g1 = -(1.0 / omega) * (1.0 / (1.0 + tn * tn)) * tn / (std::sqrt(total_power) * phi1 * c);
    t.g2 = -t.g1 / tn;
  }
  return t;
}

double fading_penalty(const FadingModel& fading) {
  if (std::holds_alternative<NoFading>(fading)) return 1.0;
  if (std::holds_alternative<RayleighFading>(fading)) return 4.0 / std::numbers::pi;
  return specfun::ricean_fading_penalty(std::get<RiceanFading>(fading).k_factor);
}

AsvCurve asv_curve(const AsvContext& ctx, double theta_range, std::size_t points) {
  if (!(theta_range > 0.0)) fail(ErrorKind::Domain, "asv_curve: theta_range must be > 0");
  if (points < 2) fail(ErrorKind::Domain, "asv_curve: need at least two points");
  const double omega_max = 2.0 * std::numbers::pi / theta_range;
  const double log_lo = std::log(1e-3 * omega_max);
  const double log_hi = std::log(omega_max);
  AsvCurve curve;
  curve.omegas.reserve(points);
  curve.values.reserve(points);
  for (std::size_t k = 1; k <= points; ++k) {
    const double omega =
        k == points ? omega_max
                    : std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(k) / points);
    try {
      const double v = asv_generic(ctx, omega);
      curve.omegas.push_back(omega);
      curve.values.push_back(v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CfZero) throw;
    }
  }
  return curve;
}

}  // namespace cmest
