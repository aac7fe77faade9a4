// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include "cmest/noise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cmest/error.hpp"

namespace cmest {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value))
    fail(ErrorKind::Domain, std::string(what) + " must be positive and finite");
}

void require_class_a(double overlap, double background_ratio, double variance) {
  if (!(overlap > 0.0)) fail(ErrorKind::Domain, "Class-A overlap A must be > 0");
  if (!(background_ratio >= 0.0)) fail(ErrorKind::Domain, "Class-A ratio T must be >= 0");
  require_positive(variance, "Class-A variance");
}

// exponent of the Class-A MGF: log M_X(t)
double class_a_log_mgf(double t, const ClassANoise& c) {
  const double tp1 = c.background_ratio + 1.0;
  return t * c.variance * c.background_ratio / tp1 +
         c.overlap * std::expm1(t * c.variance / (c.overlap * tp1));
}

}  // namespace

double LaplaceNoise::scale() const { return std::sqrt(variance / 2.0); }
double UniformNoise::half_width() const { return std::sqrt(3.0 * variance); }

double HeterogeneousScaledNoise::sensor_scale(std::size_t sensor_index) const {
  const double i = static_cast<double>(sensor_index);
  switch (rule) {
    case ScaleRule::Bounded:
      return scale * (1.0 - 1.0 / (i + 1.0));
    case ScaleRule::LinearGrowth:
      return scale * std::sqrt(i);
  }
  return scale;
}

NoiseModel NoiseModel::gaussian(double variance) {
  require_positive(variance, "Gaussian variance");
  return NoiseModel(GaussianNoise{variance});
}

NoiseModel NoiseModel::laplace(double variance) {
  require_positive(variance, "Laplace variance");
  return NoiseModel(LaplaceNoise{variance});
}

NoiseModel NoiseModel::cauchy(double scale) {
  require_positive(scale, "Cauchy scale");
  return NoiseModel(CauchyNoise{scale});
}

NoiseModel NoiseModel::uniform(double variance) {
  require_positive(variance, "uniform variance");
  return NoiseModel(UniformNoise{variance});
}

NoiseModel NoiseModel::class_a(double overlap, double background_ratio, double variance) {
  require_class_a(overlap, background_ratio, variance);
  return NoiseModel(ClassANoise{overlap, background_ratio, variance});
}

NoiseModel NoiseModel::heterogeneous(const NoiseModel& base, ScaleRule rule, double scale) {
  require_positive(scale, "heterogeneous scale");
  if (!base.is_identically_distributed())
    fail(ErrorKind::Config, "heterogeneous noise cannot wrap another heterogeneous model");
  return NoiseModel(HeterogeneousScaledNoise{std::make_shared<const NoiseModel>(base), rule, scale});
}

std::string NoiseModel::name() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const GaussianNoise& n) { os << "gaussian(var=" << n.variance << ")"; },
                 [&](const LaplaceNoise& n) { os << "laplace(var=" << n.variance << ")"; },
                 [&](const CauchyNoise& n) { os << "cauchy(scale=" << n.scale << ")"; },
                 [&](const UniformNoise& n) { os << "uniform(var=" << n.variance << ")"; },
                 [&](const ClassANoise& n) {
                   os << "class-a(A=" << n.overlap << ",T=" << n.background_ratio
                      << ",var=" << n.variance << ")";
                 },
                 [&](const HeterogeneousScaledNoise& n) {
                   os << "heterogeneous("
                      << (n.rule == ScaleRule::Bounded ? "bounded" : "linear-growth")
                      << ",scale=" << n.scale << "," << n.base->name() << ")";
                 },
             },
             v_);
  return os.str();
}

double one_minus_sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 0.1) {
    const double x2 = x * x;
    return x2 * (1.0 / 6.0 - x2 * (1.0 / 120.0 - x2 * (1.0 / 5040.0 - x2 / 362880.0)));
  }
  return 1.0 - std::sin(x) / x;
}

double class_a_mgf(double t, double overlap, double background_ratio, double variance) {
  if (t > 0.0) fail(ErrorKind::Domain, "class_a_mgf: only t <= 0 is supported");
  require_class_a(overlap, background_ratio, variance);
  return std::exp(class_a_log_mgf(t, ClassANoise{overlap, background_ratio, variance}));
}

double cf(const NoiseModel& model, double omega) {
  if (!(omega >= 0.0)) fail(ErrorKind::Domain, "cf: omega must be >= 0");
  return std::visit(
      overloaded{
          [&](const GaussianNoise& n) { return std::exp(-n.variance * omega * omega / 2.0); },
          [&](const LaplaceNoise& n) {
            const double bw = n.scale() * omega;
            return 1.0 / (1.0 + bw * bw);
          },
          [&](const CauchyNoise& n) { return std::exp(-n.scale * omega); },
          [&](const UniformNoise& n) {
            const double x = omega * n.half_width();
            if (x < 1e-4) return 1.0 - x * x / 6.0;
            return std::sin(x) / x;
          },
          [&](const ClassANoise& n) {
            return std::exp(class_a_log_mgf(-omega * omega / 2.0, n));
          },
          [&](const HeterogeneousScaledNoise&) -> double {
            fail(ErrorKind::Unsupported,
                 "cf: heterogeneous noise has no single characteristic function");
          },
      },
      model.get());
}

double one_minus_cf(const NoiseModel& model, double omega) {
  if (!(omega >= 0.0)) fail(ErrorKind::Domain, "one_minus_cf: omega must be >= 0");
  return std::visit(
      overloaded{
          [&](const GaussianNoise& n) { return -std::expm1(-n.variance * omega * omega / 2.0); },
          [&](const LaplaceNoise& n) {
            const double bw2 = n.scale() * n.scale() * omega * omega;
            return bw2 / (1.0 + bw2);
          },
          [&](const CauchyNoise& n) { return -std::expm1(-n.scale * omega); },
          [&](const UniformNoise& n) { return one_minus_sinc(omega * n.half_width()); },
          [&](const ClassANoise& n) {
            return -std::expm1(class_a_log_mgf(-omega * omega / 2.0, n));
          },
          [&](const HeterogeneousScaledNoise&) -> double {
            fail(ErrorKind::Unsupported,
                 "one_minus_cf: heterogeneous noise has no single characteristic function");
          },
      },
      model.get());
}

double sensor_cf(const NoiseModel& model, std::size_t sensor_index, double omega) {
  if (const auto* h = model.as<HeterogeneousScaledNoise>())
    return cf(*h->base, h->sensor_scale(sensor_index) * omega);
  return cf(model, omega);
}

double variance(const NoiseModel& model) {
  return std::visit(overloaded{
                        [](const GaussianNoise& n) { return n.variance; },
                        [](const LaplaceNoise& n) { return n.variance; },
                        [](const CauchyNoise&) -> double {
                          fail(ErrorKind::MomentUndefined, "variance: Cauchy has no moments");
                        },
                        [](const UniformNoise& n) { return n.variance; },
                        [](const ClassANoise& n) { return n.variance; },
                        [](const HeterogeneousScaledNoise&) -> double {
                          fail(ErrorKind::Unsupported,
                               "variance: heterogeneous noise has per-sensor variances");
                        },
                    },
                    model.get());
}

double excess_kurtosis(const NoiseModel& model) {
  return std::visit(
      overloaded{
          [](const GaussianNoise&) { return 0.0; },
          [](const LaplaceNoise&) { return 3.0; },
          [](const CauchyNoise&) -> double {
            fail(ErrorKind::MomentUndefined, "excess_kurtosis: Cauchy has no moments");
          },
          [](const UniformNoise&) { return -6.0 / 5.0; },
          // E[eta^4] = 3 E[X^2], var(X) = variance^2 / (A (T+1)^2)
          [](const ClassANoise& n) {
            const double tp1 = n.background_ratio + 1.0;
            return 3.0 / (n.overlap * tp1 * tp1);
          },
          [](const HeterogeneousScaledNoise&) -> double {
            fail(ErrorKind::Unsupported, "excess_kurtosis: heterogeneous noise");
          },
      },
      model.get());
}

NoiseSampler::NoiseSampler(const NoiseModel& model) : model_(&model) {}

double NoiseSampler::draw_base(const NoiseModel::Variant& v, Stream& rng) {
  return std::visit(
      overloaded{
          [&](const GaussianNoise& n) { return std::sqrt(n.variance) * normal_(rng); },
          [&](const LaplaceNoise& n) {
            const double magnitude = n.scale() * expo_(rng);
            return (rng() >> 63) ? magnitude : -magnitude;
          },
          [&](const CauchyNoise& n) {
            return n.scale * std::tan(std::numbers::pi * (unit_(rng) - 0.5));
          },
          [&](const UniformNoise& n) { return n.half_width() * (2.0 * unit_(rng) - 1.0); },
          [&](const ClassANoise& n) {
            // Poisson(A) by sequential-search inversion.
            const double u = unit_(rng);
            double p = std::exp(-n.overlap);
            double cdf = p;
            unsigned count = 0;
            while (u > cdf && count < 100000) {
              ++count;
              p *= n.overlap / count;
              cdf += p;
              if (p == 0.0) break;
            }
            const double tp1 = n.background_ratio + 1.0;
            const double x =
                n.variance * (count / (n.overlap * tp1) + n.background_ratio / tp1);
            const double g = normal_(rng);
            return x == 0.0 ? 0.0 : std::sqrt(x) * g;
          },
          [&](const HeterogeneousScaledNoise&) -> double {
            fail(ErrorKind::Unsupported, "nested heterogeneous noise");
          },
      },
      v);
}

double NoiseSampler::operator()(std::size_t sensor_index, Stream& rng) {
  if (const auto* h = model_->as<HeterogeneousScaledNoise>())
    return h->sensor_scale(sensor_index) * draw_base(h->base->get(), rng);
  return draw_base(model_->get(), rng);
}

double sample(const NoiseModel& model, std::size_t sensor_index, Stream& rng) {
  NoiseSampler sampler(model);
  return sampler(sensor_index, rng);
}

}  // namespace cmest
