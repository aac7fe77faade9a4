// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include "cmest/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cmest/error.hpp"

namespace cmest::specfun {
namespace {

constexpr double kInvE = 0.36787944117144232159552377016146087;
constexpr double kBranchTolerance = 1e-14;

// Puiseux series of W0 about the branch point in p = sqrt(2(e*x + 1)).
double branch_series(double p) {
  constexpr double c[] = {-1.0,          1.0,           -1.0 / 3.0,     11.0 / 72.0,
                          -43.0 / 540.0, 769.0 / 17280.0, -221.0 / 8505.0};
  double w = 0.0;
  for (int k = 6; k >= 0; --k) w = w * p + c[k];
  return w;
}

double kummer_series(double a, double b, double x) {
  constexpr int kMaxTerms = 10000;
  double sum = 1.0;
  double term = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double ratio = (a + n) / (b + n) * x / (n + 1);
    term *= ratio;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) < 1e-15 * std::abs(sum) && std::abs(ratio) < 0.5) return sum;
  }
  fail(ErrorKind::NonConvergence, "hyp1f1: series did not converge within 10^4 terms");
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) fail(ErrorKind::Domain, "lambert_w0: NaN argument");
  if (x < -kInvE - kBranchTolerance)
    fail(ErrorKind::Domain, "lambert_w0: argument below -1/e: " + std::to_string(x));
  if (x <= -kInvE) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w;
  if (x < -0.25) {
    const double p = std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * x + 1.0)));
    w = branch_series(p);
    // Halley's denominator vanishes at the branch point; the series is already
    // accurate to O(p^7) there.
    if (p < 1e-3) return w;
  } else if (x < 3.0) {
    const double l1 = std::log1p(x);
    w = l1 * (1.0 - std::log1p(l1) / (2.0 + l1));
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
  }
  return w;
}

double hyp1f1(double a, double b, double x) {
  if (std::isnan(a) || std::isnan(b) || std::isnan(x))
    fail(ErrorKind::Domain, "hyp1f1: NaN argument");
  if (b <= 0.0 && b == std::floor(b))
    fail(ErrorKind::Domain, "hyp1f1: b must not be a non-positive integer");
  if (std::abs(x) > 50.0) fail(ErrorKind::Domain, "hyp1f1: |x| > 50 is outside the supported range");
  if (x == 0.0) return 1.0;
  if (x < 0.0) return std::exp(x) * kummer_series(b - a, b, -x);
  return kummer_series(a, b, x);
}

double ricean_fading_penalty(double k_factor) {
  if (!(k_factor >= 0.0)) fail(ErrorKind::Domain, "ricean_fading_penalty: K must be >= 0");
  if (k_factor > 50.0) fail(ErrorKind::Domain, "ricean_fading_penalty: K > 50 is unsupported");
  constexpr double kGammaThreeHalves = 0.88622692545275801364908374167057;  // sqrt(pi)/2
  // Unit-power Rice envelope mean.
  const double mean_envelope = kGammaThreeHalves * std::exp(-k_factor) *
                               hyp1f1(1.5, 1.0, k_factor) / std::sqrt(k_factor + 1.0);
  return 1.0 / (mean_envelope * mean_envelope);
}

}  // namespace cmest::specfun
