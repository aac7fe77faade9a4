// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include "cmest/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cmest/asv.hpp"
#include "cmest/error.hpp"
#include "cmest/specfun.hpp"
#include "numeric.hpp"

namespace cmest {
namespace {

double omega_max_for(double theta_range) {
  if (!(theta_range > 0.0)) fail(ErrorKind::Domain, "theta_range must be > 0");
  return 2.0 * std::numbers::pi / theta_range;
}

void require_inputs(double variance, double snr_inv) {
  if (!(variance > 0.0)) fail(ErrorKind::Domain, "omega_star: variance/scale must be > 0");
  if (!(snr_inv >= 0.0)) fail(ErrorKind::Domain, "omega_star: snr_inv must be >= 0");
}

// Smallest omega of the default AsV curve; stands in for the unattained origin.
double origin_proxy(double omega_max) { return 1e-3 * omega_max; }

OmegaStar finish(double omega_unc, double omega_max, double beta, OmegaMethod method) {
  OmegaStar r;
  r.beta = beta;
  r.method = method;
  r.clamped = omega_unc >= omega_max;
  r.omega = r.clamped ? omega_max : omega_unc;
  return r;
}

}  // namespace

std::string_view method_name(OmegaMethod method) {
  switch (method) {
    case OmegaMethod::GaussianRoot: return "gaussian-root";
    case OmegaMethod::CauchyLambert: return "cauchy-lambert";
    case OmegaMethod::LaplaceQuartic: return "laplace-quartic";
    case OmegaMethod::UniformBisect: return "uniform-bisect";
    case OmegaMethod::GridGlobal: return "grid-global";
  }
  return "unknown";
}

OmegaStar omega_star_gaussian(double variance, double snr_inv, double theta_range) {
  require_inputs(variance, snr_inv);
  const double omega_max = omega_max_for(theta_range);
  const double sigma = std::sqrt(variance);
  if (snr_inv == 0.0) {
    OmegaStar r;
    r.omega = origin_proxy(omega_max);
    r.beta = variance * r.omega * r.omega;
    r.at_origin = true;
    r.method = OmegaMethod::GaussianRoot;
    r.asv_at_opt = asv_gaussian(variance, snr_inv, r.omega);
    return r;
  }
  const double k = snr_inv + 1.0;
  auto residual = [k](double b) { return k * (b - 1.0) * std::exp(2.0 * b) + b + 1.0; };
  auto slope = [k](double b) { return k * (2.0 * b - 1.0) * std::exp(2.0 * b) + 1.0; };
  // residual(0) = -snr_inv < 0, residual(1) = 2 > 0
  double beta = detail::bisect_root(residual, 0.0, 1.0);
  for (int it = 0; it < 4; ++it) {
    const double f = residual(beta);
    if (std::abs(f) < 1e-13) break;
    const double next = beta - f / slope(beta);
    if (!(next > 0.0 && next < 1.0) || std::abs(residual(next)) >= std::abs(f)) break;
    beta = next;
  }
  OmegaStar r = finish(std::sqrt(beta) / sigma, omega_max, beta, OmegaMethod::GaussianRoot);
  r.asv_at_opt = asv_gaussian(variance, snr_inv, r.omega);
  return r;
}

OmegaStar omega_star_cauchy(double scale, double snr_inv, double theta_range) {
  require_inputs(scale, snr_inv);
  const double omega_max = omega_max_for(theta_range);
  const double arg = -2.0 * std::exp(-2.0) / (snr_inv + 1.0);
  if (arg < -std::exp(-1.0)) fail(ErrorKind::Domain, "omega_star_cauchy: Lambert argument below -1/e");
  const double omega_unc = (2.0 + specfun::lambert_w0(arg)) / (2.0 * scale);
  OmegaStar r = finish(omega_unc, omega_max, scale * omega_unc, OmegaMethod::CauchyLambert);
  r.asv_at_opt = asv_cauchy(scale, snr_inv, r.omega);
  return r;
}

OmegaStar omega_star_laplace(double variance, double snr_inv, double theta_range) {
  require_inputs(variance, snr_inv);
  const double omega_max = omega_max_for(theta_range);
  const double s = snr_inv;
  const double radicand = s * std::pow(s + 1.0, 3) * (375.0 * s + 32.0);
  const double c = std::cbrt(125.0 * s * s * s + 258.0 * s * s + 141.0 * s +
                             3.0 * std::sqrt(3.0) * std::sqrt(radicand) + 8.0);
  const double beta = (c / (s + 1.0) + (25.0 * s + 4.0) / c + 2.0) / 12.0;
  const double b = std::sqrt(variance / 2.0);
  OmegaStar r = finish(std::sqrt(beta) / b, omega_max, beta, OmegaMethod::LaplaceQuartic);
  r.asv_at_opt = asv_laplace(variance, snr_inv, r.omega);
  return r;
}

OmegaStar omega_star_uniform(double variance, double snr_inv, double theta_range) {
  require_inputs(variance, snr_inv);
  const double omega_max = omega_max_for(theta_range);
  const double a = std::sqrt(3.0 * variance);
  if (snr_inv == 0.0) {
    // negative excess kurtosis: the per-sensor AsV increases away from the origin
    OmegaStar r;
    r.omega = origin_proxy(omega_max);
    r.beta = r.omega * a;
    r.at_origin = true;
    r.method = OmegaMethod::UniformBisect;
    r.asv_at_opt = asv_uniform(variance, snr_inv, r.omega);
    return r;
  }
  const double k = snr_inv + 1.0;
  auto stationarity = [k](double b) {
    return (8.0 * k * b * b - 1.0) * std::cos(b) + std::cos(3.0 * b) - 4.0 * b * std::sin(b);
  };
  // Positive near the origin (~ 8 s beta^2), negative at pi. Locate the first
  // sign change on a log grid, then bisect inside it.
  constexpr int kScan = 4000;
  const double lo_log = std::log(1e-6);
  const double hi_log = std::log(std::numbers::pi);
  double prev = std::exp(lo_log);
  double prev_val = stationarity(prev);
  double beta = std::numeric_limits<double>::quiet_NaN();
  for (int i = 1; i <= kScan; ++i) {
    const double cur = i == kScan ? std::numbers::pi : std::exp(lo_log + (hi_log - lo_log) * i / kScan);
    const double cur_val = stationarity(cur);
    if (prev_val > 0.0 && cur_val <= 0.0) {
      beta = detail::bisect_root(stationarity, prev, cur);
      break;
    }
    prev = cur;
    prev_val = cur_val;
  }
  if (std::isnan(beta)) fail(ErrorKind::RootNotFound, "omega_star_uniform: no stationary point on (0, pi)");
  OmegaStar r = finish(beta / a, omega_max, beta, OmegaMethod::UniformBisect);
  r.asv_at_opt = asv_uniform(variance, snr_inv, r.omega);
  return r;
}

OmegaStar omega_star_numeric(const NoiseModel& noise, double snr_inv, double theta_range,
                             std::size_t grid_points) {
  if (!(snr_inv >= 0.0)) fail(ErrorKind::Domain, "omega_star: snr_inv must be >= 0");
  if (grid_points < 4) fail(ErrorKind::Domain, "omega_star_numeric: grid too small");
  const double omega_max = omega_max_for(theta_range);
  const AsvContext ctx{noise, snr_inv, 1.0};
  auto objective = [&](double omega) {
    try {
      return asv_generic(ctx, omega);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CfZero) throw;
      return std::numeric_limits<double>::infinity();
    }
  };

  // half log-spaced (origin blow-up), half linear (oscillatory minima)
  const std::size_t half = grid_points / 2;
  std::vector<double> grid;
  grid.reserve(grid_points);
  const double lo_log = std::log(1e-4 * omega_max);
  const double hi_log = std::log(omega_max);
  for (std::size_t k = 0; k < half; ++k)
    grid.push_back(std::exp(lo_log + (hi_log - lo_log) * static_cast<double>(k) / (half - 1)));
  for (std::size_t k = 1; k <= grid_points - half; ++k)
    grid.push_back(omega_max * static_cast<double>(k) / static_cast<double>(grid_points - half));
  grid.back() = omega_max;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  grid.back() = omega_max;

  std::size_t best = grid.size();
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = objective(grid[i]);
    if (v < best_val) {  // strict: lowest index wins ties
      best_val = v;
      best = i;
    }
  }
  if (best == grid.size())
    fail(ErrorKind::CfZero, "omega_star_numeric: AsV undefined at every grid point");

  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  double omega = grid[best];
  if (hi > lo) {
    const double refined = detail::golden_section_minimize(objective, lo, hi);
    const double refined_val = objective(refined);
    if (refined_val < best_val) {
      omega = refined;
      best_val = refined_val;
    }
  }
  OmegaStar r;
  r.omega = omega;
  r.beta = std::numeric_limits<double>::quiet_NaN();
  r.clamped = omega >= omega_max * (1.0 - 1e-12);
  if (r.clamped) r.omega = omega_max;
  r.asv_at_opt = best_val;
  r.method = OmegaMethod::GridGlobal;
  return r;
}

OmegaStar omega_star(const NoiseModel& noise, double snr_inv, double theta_range) {
  if (const auto* g = noise.as<GaussianNoise>()) return omega_star_gaussian(g->variance, snr_inv, theta_range);
  if (const auto* c = noise.as<CauchyNoise>()) return omega_star_cauchy(c->scale, snr_inv, theta_range);
  if (const auto* l = noise.as<LaplaceNoise>()) return omega_star_laplace(l->variance, snr_inv, theta_range);
  if (const auto* u = noise.as<UniformNoise>()) return omega_star_uniform(u->variance, snr_inv, theta_range);
  if (!noise.is_identically_distributed())
    fail(ErrorKind::Unsupported, "omega_star: AsV is only defined for identically distributed noise");
  return omega_star_numeric(noise, snr_inv, theta_range);
}

}  // namespace cmest
