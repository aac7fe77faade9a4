// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "cmest/error.hpp"

namespace cmest::detail {

/// Bisection for a sign change of f on [lo, hi]; stops when the bracket is
/// below rel_tol relative to its midpoint.
template <class F>
double bisect_root(F&& f, double lo, double hi, double rel_tol = 1e-12, int max_iter = 400) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) fail(ErrorKind::RootNotFound, "bisect_root: no sign change in bracket");
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * std::abs(mid)) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Golden-section search for a minimum of f on [a, b].
template <class F>
double golden_section_minimize(F&& f, double a, double b, double rel_tol = 1e-12, int max_iter = 300) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > rel_tol * std::abs(0.5 * (a + b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace cmest::detail
