// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include "cmest/estimators.hpp"

#include <cmath>
#include <numbers>

#include "cmest/error.hpp"

namespace cmest {

Estimate estimate_cm(const Snapshot& snapshot, double omega, const PowerMode& power) {
  if (!(omega > 0.0) || !std::isfinite(omega)) fail(ErrorKind::Domain, "estimate_cm: omega must be > 0");
  if (!std::isfinite(snapshot.y.real()) || !std::isfinite(snapshot.y.imag()))
    fail(ErrorKind::Domain, "estimate_cm: received value is not finite");
  const double sensors = static_cast<double>(snapshot.sensors);
  const bool total = is_total(power);
  const std::complex<double> z = snapshot.y / (total ? std::sqrt(sensors) : sensors);
  if (z == std::complex<double>(0.0, 0.0))
    fail(ErrorKind::Degenerate, "estimate_cm: phase of a zero received value is undefined");
  double angle = std::atan2(z.imag(), z.real());
  if (angle < 0.0) angle += 2.0 * std::numbers::pi;
  // atan2 may return exactly -0.0 or a tiny negative that rounds up to 2 pi
  if (angle >= 2.0 * std::numbers::pi) angle = 0.0;
  return {angle / omega, angle, total ? Normalization::Total : Normalization::PerSensor};
}

double estimate_af(const Snapshot& snapshot, double af_gain) {
  if (!(af_gain > 0.0)) fail(ErrorKind::Domain, "estimate_af: gain must be > 0");
  return snapshot.y.real() / (static_cast<double>(snapshot.sensors) * af_gain);
}

}  // namespace cmest
