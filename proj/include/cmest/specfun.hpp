// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace cmest::specfun {

/// Principal branch W0 of the Lambert function (inverse of w*e^w), x >= -1/e.
double lambert_w0(double x);

/// Confluent hypergeometric function 1F1(a; b; x) by Kummer series.
/// Negative arguments go through Kummer's transformation so that the summed
/// series has no catastrophic cancellation. Supported for |x| <= 50.
double hyp1f1(double a, double b, double x);

/// AsV multiplier (E|h|)^-2 for unit-power Ricean fading with factor K >= 0.
double ricean_fading_penalty(double k_factor);

}  // namespace cmest::specfun
