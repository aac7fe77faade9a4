// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "cmest/channel.hpp"
#include "cmest/noise.hpp"

namespace cmest {

/// Everything the asymptotic variance depends on besides omega.
struct AsvContext {
  NoiseModel noise = NoiseModel::gaussian(1.0);
  double snr_inv = 0.0;         // sigma_v^2 / P_T; 0 encodes the per-sensor-power limit
  double fading_penalty = 1.0;  // (E|h|)^-2
};

/// fading_penalty * [snr_inv + 1 - phi(2w)] / (2 w^2 phi(w)^2).
/// Throws Error{CfZero} when |phi(w)| <= 1e-12.
double asv_generic(const AsvContext& ctx, double omega);

// Closed forms for individual noise families (no fading).
double asv_gaussian(double variance, double snr_inv, double omega);
double asv_cauchy(double scale, double snr_inv, double omega);
double asv_laplace(double variance, double snr_inv, double omega);
double asv_uniform(double variance, double snr_inv, double omega);
double asv_class_a(double overlap, double background_ratio, double variance, double snr_inv,
                   double omega);

/// Second-order expansion about the origin in the per-sensor-power limit:
/// variance - kurtosis * variance^2 * omega^2 / 3.
double asv_small_omega(double variance, double excess_kurtosis, double omega);

/// Distribution-free upper bound on min over (0, 2 pi / theta_range] of the AsV,
/// valid for any finite-variance noise when (2 pi sigma / theta_range)^2 < 2.
double asv_upper_bound(double variance, double snr_inv, double theta_range);

/// Amplify-and-forward AsV: variance + snr_inv / 2 * (theta^2 + variance).
double asv_af(double theta, double variance, double snr_inv);

/// Gaussian AsV evaluated at omega = 1 / sigma.
double asv_low_snr_gaussian(double variance, double snr_inv);

enum class GradientForm {
  Auto,     // tangent form unless near-singular, then sin/cos form
  Tangent,  // literal tan-based gradient; throws at singular angles
  SinCos,
};

/// Covariance of sqrt(L) [z^R - E z^R, z^I - E z^I] and the gradient of the
/// phase map; the delta-method composite reproduces asv_generic.
struct CovarianceTerms {
  double sigma11, sigma12, sigma22;
  double v_c, v_s;
  double g1, g2;

  double composite() const { return g1 * g1 * sigma11 + 2.0 * g1 * g2 * sigma12 + g2 * g2 * sigma22; }
};

CovarianceTerms appendix_covariance(const NoiseModel& noise, double omega, double theta,
                                    double total_power, double channel_noise_variance,
                                    GradientForm form = GradientForm::Auto);

double fading_penalty(const FadingModel& fading);

struct AsvCurve {
  std::vector<double> omegas;
  std::vector<double> values;
};

/// AsV sampled on `points` log-spaced omegas over (1e-3 * w_max, w_max],
/// w_max = 2 pi / theta_range. Points where the CF vanishes are dropped.
AsvCurve asv_curve(const AsvContext& ctx, double theta_range, std::size_t points = 2000);

}  // namespace cmest
