// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <variant>

#include "cmest/rng.hpp"

namespace cmest {

class NoiseModel;

struct GaussianNoise {
  double variance;
};

/// Laplace with scale b, b^2 = variance / 2.
struct LaplaceNoise {
  double variance;
  double scale() const;
};

/// Cauchy is configured by its scale (no variance exists).
struct CauchyNoise {
  double scale;
};

/// Uniform on [-a, a], a = sqrt(3 * variance).
struct UniformNoise {
  double variance;
  double half_width() const;
};

/// Middleton Class-A: eta = sqrt(X) * G with
/// X = variance * (Y / (A (T + 1)) + T / (T + 1)), Y ~ Poisson(A).
struct ClassANoise {
  double overlap;           // A
  double background_ratio;  // T
  double variance;
};

enum class ScaleRule {
  Bounded,       // sigma_i = scale * (1 - 1 / (i + 1))
  LinearGrowth,  // sigma_i = scale * sqrt(i)
};

/// Non-identical sensing noise eta_i = sigma_i * eta, sensor index i >= 1.
struct HeterogeneousScaledNoise {
  std::shared_ptr<const NoiseModel> base;
  ScaleRule rule;
  double scale;

  double sensor_scale(std::size_t sensor_index) const;
};

class NoiseModel {
 public:
  using Variant = std::variant<GaussianNoise, LaplaceNoise, CauchyNoise, UniformNoise, ClassANoise,
                               HeterogeneousScaledNoise>;

  static NoiseModel gaussian(double variance);
  static NoiseModel laplace(double variance);
  static NoiseModel cauchy(double scale);
  static NoiseModel uniform(double variance);
  static NoiseModel class_a(double overlap, double background_ratio, double variance);
  static NoiseModel heterogeneous(const NoiseModel& base, ScaleRule rule, double scale);

  const Variant& get() const { return v_; }
  template <class T>
  const T* as() const {
    return std::get_if<T>(&v_);
  }
  bool is_identically_distributed() const {
    return !std::holds_alternative<HeterogeneousScaledNoise>(v_);
  }

  std::string name() const;

 private:
  explicit NoiseModel(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Characteristic function phi(omega), omega >= 0. Real because every model is symmetric.
double cf(const NoiseModel& model, double omega);

/// 1 - phi(omega) without cancellation near the origin.
double one_minus_cf(const NoiseModel& model, double omega);

/// CF of the i-th sensor's noise; defined for every model including heterogeneous ones.
double sensor_cf(const NoiseModel& model, std::size_t sensor_index, double omega);

/// MGF of the Class-A variance variable X at t <= 0.
double class_a_mgf(double t, double overlap, double background_ratio, double variance);

double variance(const NoiseModel& model);
double excess_kurtosis(const NoiseModel& model);

/// (x - sin x) / x, accurate for small x.
double one_minus_sinc(double x);

/// Stateful sampler bound to one model; reuse it across draws from the same
/// stream (the normal generator caches its second variate).
class NoiseSampler {
 public:
  explicit NoiseSampler(const NoiseModel& model);

  double operator()(std::size_t sensor_index, Stream& rng);

 private:
  double draw_base(const NoiseModel::Variant& v, Stream& rng);

  const NoiseModel* model_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::exponential_distribution<double> expo_{1.0};
};

/// One draw of eta_i.
double sample(const NoiseModel& model, std::size_t sensor_index, Stream& rng);

}  // namespace cmest
