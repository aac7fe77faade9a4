// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>

#include "cmest/noise.hpp"

namespace cmest {

enum class OmegaMethod { GaussianRoot, CauchyLambert, LaplaceQuartic, UniformBisect, GridGlobal };

std::string_view method_name(OmegaMethod method);

/// Minimizer of the AsV over (0, 2 pi / theta_range].
struct OmegaStar {
  double omega = 0.0;
  double beta = 0.0;        // substitution variable of the closed form (NaN for grid-global)
  bool clamped = false;     // omega == 2 pi / theta_range
  bool at_origin = false;   // infimum sits at omega -> 0 and is not attained
  double asv_at_opt = 0.0;  // AsV (no fading) at omega
  OmegaMethod method = OmegaMethod::GridGlobal;
};

/// Root of (s+1)(beta-1)e^{2 beta} + beta + 1 = 0 on (0, 1), omega = sqrt(beta)/sigma.
/// With snr_inv == 0 the infimum is the origin; returns the smallest curve
/// omega (1e-3 * w_max) with at_origin set.
OmegaStar omega_star_gaussian(double variance, double snr_inv, double theta_range);

/// Lambert-W solution omega = (2 + W0(-2 e^-2 / (s+1))) / (2 gamma).
OmegaStar omega_star_cauchy(double scale, double snr_inv, double theta_range);

/// Closed-form positive root of the quartic stationarity condition.
OmegaStar omega_star_laplace(double variance, double snr_inv, double theta_range);

/// Bisection on the stationarity condition over beta = omega * a in (0, pi).
OmegaStar omega_star_uniform(double variance, double snr_inv, double theta_range);

/// Hybrid log/linear grid scan with golden-section refinement of the best bracket.
OmegaStar omega_star_numeric(const NoiseModel& noise, double snr_inv, double theta_range,
                             std::size_t grid_points = 10000);

/// Closed form when one exists for the model, grid-global otherwise.
OmegaStar omega_star(const NoiseModel& noise, double snr_inv, double theta_range);

}  // namespace cmest
