// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "cmest/accumulator.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using cmest::TrialAccumulator;

TEST_CASE("moments of a small data set") {
  TrialAccumulator a;
  for (double x : {2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0}) a.add(x);
  CHECK(a.count() == 8);
  CHECK_THAT(a.mean(), WithinRel(5.0, 1e-15));
  CHECK_THAT(a.m2(), WithinRel(32.0, 1e-14));
  CHECK_THAT(a.variance(), WithinRel(32.0 / 7.0, 1e-14));
  CHECK_THAT(a.fourth_moment(), WithinRel(356.0 / 8.0, 1e-14));
  CHECK_THAT(a.kurtosis(), WithinRel(2.78125, 1e-14));
  CHECK_THAT(a.mean_square(), WithinRel((4 + 16 * 3 + 25 * 2 + 49 + 81) / 8.0, 1e-14));
}

TEST_CASE("empty and single-sample accumulators") {
  TrialAccumulator a;
  CHECK(std::isnan(a.variance()));
  CHECK(std::isnan(a.mean_square()));
  a.add(3.0);
  CHECK(std::isnan(a.variance()));
  CHECK(std::isnan(a.variance_std_error()));
  TrialAccumulator b;
  b.merge(a);
  CHECK(b.count() == 1);
  a.merge(TrialAccumulator{});
  CHECK(a.count() == 1);
}

TEST_CASE("merging disjoint chunks matches a single pass") {
  std::mt19937_64 rng(99);
  std::student_t_distribution<double> t(5.0);
  std::vector<double> xs(100003);
  for (auto& x : xs) x = 3.0 + 2.0 * t(rng);

  TrialAccumulator whole;
  for (double x : xs) whole.add(x);
  for (std::size_t chunk : {1u, 7u, 256u, 4096u}) {
    TrialAccumulator merged;
    for (std::size_t i = 0; i < xs.size(); i += chunk) {
      TrialAccumulator part;
      for (std::size_t j = i; j < std::min(xs.size(), i + chunk); ++j) part.add(xs[j]);
      merged.merge(part);
    }
    CHECK(merged.count() == whole.count());
    CHECK_THAT(merged.mean(), WithinRel(whole.mean(), 1e-12));
    CHECK_THAT(merged.variance(), WithinRel(whole.variance(), 1e-11));
    CHECK_THAT(merged.fourth_moment(), WithinRel(whole.fourth_moment(), 1e-10));
  }
}

TEST_CASE("variance standard error tracks the spread of the estimator") {
  // normal data: se(var) = sigma^2 sqrt(2 / n)
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 2.0);
  TrialAccumulator a;
  const int n = 200000;
  for (int i = 0; i < n; ++i) a.add(g(rng));
  CHECK_THAT(a.variance_std_error(), WithinRel(4.0 * std::sqrt(2.0 / n), 0.03));
  CHECK(std::abs(a.variance() - 4.0) < 5.0 * a.variance_std_error());
}

TEST_CASE("large offsets do not destroy precision") {
  TrialAccumulator a;
  for (int i = 0; i < 1000; ++i) a.add(1e9 + (i % 2 ? 1.0 : -1.0));
  CHECK_THAT(a.variance(), WithinRel(1000.0 / 999.0, 1e-7));
}
