// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "cmest/channel.hpp"

namespace cmest {

enum class Normalization { PerSensor, Total };

struct Estimate {
  double value;      // raw_angle / omega, not clamped to [0, theta_range]
  double raw_angle;  // in [0, 2 pi)
  Normalization normalization;
};

/// Phase estimator: z = y / sqrt(L) (total power) or y / L (per-sensor power),
/// theta_hat = arg(z) / omega with the four-quadrant angle mapped onto [0, 2 pi).
/// Throws Error{Degenerate} when z == 0.
Estimate estimate_cm(const Snapshot& snapshot, double omega, const PowerMode& power);

/// Amplify-and-forward estimator Re{y} / (L alpha).
double estimate_af(const Snapshot& snapshot, double af_gain);

}  // namespace cmest
