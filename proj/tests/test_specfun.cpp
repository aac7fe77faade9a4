// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <boost/math/special_functions/lambert_w.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "catch_amalgamated.hpp"
#include "cmest/error.hpp"
#include "cmest/specfun.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using cmest::specfun::hyp1f1;
using cmest::specfun::lambert_w0;
using cmest::specfun::ricean_fading_penalty;

namespace {

using big = boost::multiprecision::cpp_dec_float_50;

// Plain Kummer series in 50 digits; enough headroom for |x| <= 50.
double hyp1f1_reference(double a, double b, double x) {
  big term = 1, sum = 1;
  const big A = a, B = b, X = x;
  for (int n = 0; n < 2000; ++n) {
    term *= (A + n) / (B + n) * X / (n + 1);
    sum += term;
    if (abs(term) < abs(sum) * big("1e-40")) break;
  }
  return static_cast<double>(sum);
}

bool throws_kind(auto&& f, cmest::ErrorKind kind) {
  try {
    f();
  } catch (const cmest::Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("lambert w0 frozen values") {
  CHECK_THAT(lambert_w0(1.0), WithinRel(0.567143290409783873, 1e-15));
  CHECK_THAT(lambert_w0(10.0), WithinRel(1.7455280027406993831, 1e-15));
  CHECK_THAT(lambert_w0(-0.3), WithinRel(-0.48940222718021493357, 1e-14));
  CHECK_THAT(lambert_w0(-2.0 * std::exp(-2.0)), WithinRel(-0.40637573995995990768, 1e-14));
  CHECK_THAT(lambert_w0(-2.0 * std::exp(-2.0) / 1.1), WithinRel(-0.34874300990029062637, 1e-14));
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK_THAT(lambert_w0(std::numbers::e), WithinRel(1.0, 1e-15));
  CHECK_THAT(lambert_w0(-1.0 / std::numbers::e), WithinAbs(-1.0, 1e-7));
}

TEST_CASE("lambert w0 defining identity and boost agreement") {
  const double lo = -1.0 / std::numbers::e;
  for (int i = 0; i <= 4000; ++i) {
    const double x = lo + (10.0 - lo) * i / 4000.0;
    const double w = lambert_w0(x);
    CHECK_THAT(w * std::exp(w), WithinAbs(x, 1e-12 * std::max(1.0, std::abs(x))));
    if (i > 0) CHECK_THAT(w, WithinAbs(boost::math::lambert_w0(x), 1e-9));
  }
  for (double x : {20.0, 100.0, 1e4, 1e8, 1e300}) {
    CHECK_THAT(lambert_w0(x), WithinRel(boost::math::lambert_w0(x), 1e-13));
  }
}

TEST_CASE("lambert w0 near the branch point") {
  const double lo = -1.0 / std::numbers::e;
  for (double d : {1e-14, 1e-12, 1e-10, 1e-8, 1e-6, 1e-4, 1e-2}) {
    const double x = lo + d;
    const double w = lambert_w0(x);
    CHECK(w >= -1.0);
    CHECK_THAT(w * std::exp(w), WithinAbs(x, 1e-15));
  }
}

TEST_CASE("lambert w0 domain") {
  CHECK(throws_kind([] { lambert_w0(-0.5); }, cmest::ErrorKind::Domain));
  CHECK(throws_kind([] { lambert_w0(std::nan("")); }, cmest::ErrorKind::Domain));
}

TEST_CASE("1F1 frozen values") {
  CHECK_THAT(hyp1f1(1.5, 1.0, 5.0), WithinRel(393.7700753196285008881358, 1e-13));
  CHECK_THAT(hyp1f1(0.5, 1.5, -3.0), WithinRel(0.50434356023143880704, 1e-13));
  CHECK_THAT(hyp1f1(2.0, 3.0, 10.0), WithinRel(3964.7838430652089731, 1e-13));
  CHECK_THAT(hyp1f1(-1.5, 1.0, -20.0), WithinRel(74.900443273388487011, 1e-12));
  CHECK_THAT(hyp1f1(1.5, 1.0, -5.0), WithinRel(-0.047262518792478187167, 1e-11));
  CHECK(hyp1f1(1.5, 1.0, 0.0) == 1.0);
}

TEST_CASE("1F1 against a 50-digit series") {
  const double as[] = {-2.5, -0.5, 0.5, 1.5, 3.0, 7.25};
  const double bs[] = {0.5, 1.0, 2.5, 6.0};
  for (double a : as)
    for (double b : bs)
      for (double x = -50.0; x <= 50.0; x += 2.5) {
        const double want = hyp1f1_reference(a, b, x);
        INFO("a=" << a << " b=" << b << " x=" << x);
        CHECK_THAT(hyp1f1(a, b, x), WithinAbs(want, 1e-10 * std::max(1.0, std::abs(want))));
      }
}

TEST_CASE("1F1 agrees with boost") {
  for (double x = -30.0; x <= 30.0; x += 1.5) {
    CHECK_THAT(hyp1f1(1.5, 1.0, x), WithinRel(boost::math::hypergeometric_1F1(1.5, 1.0, x), 1e-10));
  }
}

TEST_CASE("1F1 domain") {
  CHECK(throws_kind([] { hyp1f1(1.0, 0.0, 1.0); }, cmest::ErrorKind::Domain));
  CHECK(throws_kind([] { hyp1f1(1.0, -3.0, 1.0); }, cmest::ErrorKind::Domain));
  CHECK(throws_kind([] { hyp1f1(1.0, 1.0, 51.0); }, cmest::ErrorKind::Domain));
}

TEST_CASE("ricean penalty frozen values") {
  CHECK_THAT(ricean_fading_penalty(0.0), WithinRel(4.0 / std::numbers::pi, 1e-12));
  CHECK_THAT(ricean_fading_penalty(1.0), WithinRel(1.217050042945382905, 1e-12));
  CHECK_THAT(ricean_fading_penalty(5.0), WithinRel(1.085227450631067625, 1e-12));
  CHECK_THAT(ricean_fading_penalty(50.0), WithinRel(1.009850483143698529, 1e-12));
}

TEST_CASE("ricean penalty decreases towards one") {
  double prev = ricean_fading_penalty(0.0);
  for (double k = 0.25; k <= 50.0; k += 0.25) {
    const double v = ricean_fading_penalty(k);
    CHECK(v < prev);
    CHECK(v > 1.0);
    prev = v;
  }
  CHECK(throws_kind([] { ricean_fading_penalty(-0.1); }, cmest::ErrorKind::Domain));
  CHECK(throws_kind([] { ricean_fading_penalty(51.0); }, cmest::ErrorKind::Domain));
}
