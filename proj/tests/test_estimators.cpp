// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <vector>

#include "catch_amalgamated.hpp"
#include "cmest/accumulator.hpp"
#include "cmest/channel.hpp"
#include "cmest/error.hpp"
#include "cmest/estimators.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace cmest;

namespace {

bool throws_kind(auto&& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("noiseless snapshots are inverted exactly") {
  for (bool total : {true, false}) {
    NetworkConfig c;
    c.sensors = 37;
    c.theta_range = 4.0;
    c.omega = 1.2;
    c.power = total ? PowerMode{TotalPower{5.0}} : PowerMode{PerSensorPower{0.7}};
    c.channel_noise_variance = 0.0;
    const std::vector<double> eta(c.sensors, 0.0);
    for (double theta = 0.05; theta < 4.0; theta += 0.25) {
      c.theta = theta;
      Stream rng(1);
      const Estimate e = estimate_cm(simulate_cm_snapshot(c, eta, rng), c.omega, c.power);
      CHECK_THAT(e.value, WithinAbs(theta, 1e-12));
      CHECK(e.normalization == (total ? Normalization::Total : Normalization::PerSensor));
    }
  }
}

TEST_CASE("normalization scales the magnitude but not the phase") {
  Snapshot s{std::polar(50.0, 1.0), 25, TotalPower{4.0}, 0.5};
  const auto t = estimate_cm(s, 0.5, TotalPower{4.0});
  const auto p = estimate_cm(s, 0.5, PerSensorPower{1.0});
  CHECK(t.raw_angle == p.raw_angle);
  CHECK_THAT(t.value, WithinRel(2.0, 1e-14));
}

TEST_CASE("angle lies in [0, 2 pi) and the estimate is not clamped") {
  const double omega = 0.5;
  Snapshot s{std::polar(1.0, -1e-3), 1, PerSensorPower{1.0}, omega};
  const auto e = estimate_cm(s, omega, s.power);
  CHECK(e.raw_angle >= 0.0);
  CHECK(e.raw_angle < 2.0 * std::numbers::pi);
  // theta near zero plus a small negative phase error wraps to the top of the range
  CHECK_THAT(e.value, WithinAbs((2.0 * std::numbers::pi - 1e-3) / omega, 1e-12));

  Snapshot neg_zero{{1.0, -0.0}, 1, PerSensorPower{1.0}, omega};
  CHECK(estimate_cm(neg_zero, omega, neg_zero.power).raw_angle == 0.0);
}

TEST_CASE("degenerate and invalid inputs") {
  Snapshot zero{{0.0, 0.0}, 10, TotalPower{1.0}, 0.3};
  CHECK(throws_kind([&] { estimate_cm(zero, 0.3, zero.power); }, ErrorKind::Degenerate));
  Snapshot nan{{std::nan(""), 1.0}, 10, TotalPower{1.0}, 0.3};
  CHECK(throws_kind([&] { estimate_cm(nan, 0.3, nan.power); }, ErrorKind::Domain));
  Snapshot ok{{1.0, 1.0}, 10, TotalPower{1.0}, 0.3};
  CHECK(throws_kind([&] { estimate_cm(ok, 0.0, ok.power); }, ErrorKind::Domain));
  CHECK(throws_kind([&] { estimate_af(ok, 0.0); }, ErrorKind::Domain));
}

TEST_CASE("af estimator inverts a noiseless snapshot") {
  NetworkConfig c;
  c.sensors = 100;
  c.theta = 3.3;
  c.theta_range = 12.0;
  c.omega = 0.5;
  c.power = TotalPower{10.0};
  c.channel_noise_variance = 0.0;
  const std::vector<double> eta(c.sensors, 0.0);
  Stream rng(1);
  const double alpha = af_gain(10.0, c.sensors, c.theta, 1.0);
  CHECK_THAT(estimate_af(simulate_af_snapshot(c, 1.0, eta, rng), alpha), WithinRel(3.3, 1e-14));
}

TEST_CASE("mean squared error shrinks as sensors are added") {
  NetworkConfig c;
  c.theta = 2.0;
  c.theta_range = 12.0;
  c.omega = 0.4;
  c.power = TotalPower{10.0};
  c.channel_noise_variance = 1.0;
  c.noise = NoiseModel::laplace(1.0);
  double prev = INFINITY;
  for (std::size_t sensors : {20u, 200u, 2000u}) {
    c.sensors = sensors;
    TrialAccumulator acc;
    for (int t = 0; t < 2000; ++t) {
      Stream rng = make_stream(3, 0, sensors, t);
      acc.add(estimate_cm(simulate_cm_snapshot(c, rng), c.omega, c.power).value - c.theta);
    }
    CHECK(acc.mean_square() < prev / 4.0);
    prev = acc.mean_square();
  }
}
