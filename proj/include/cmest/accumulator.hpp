// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace cmest {

/// Single-pass streaming moments (Welford / Pebay). Two accumulators over
/// disjoint trial sets merge into the accumulator of their union.
class TrialAccumulator {
 public:
  void add(double x);
  void merge(const TrialAccumulator& other);

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double m2() const { return m2_; }
  /// m2 / (n - 1); NaN for n < 2.
  double variance() const;
  /// Fourth central moment estimate m4 / n.
  double fourth_moment() const;
  /// Sample kurtosis m4 n / m2^2 (3 for a normal law).
  double kurtosis() const;
  /// Standard error of variance() from the empirical fourth moment.
  double variance_std_error() const;
  /// mean of x^2
  double mean_square() const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
};

}  // namespace cmest
