// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include "cmest/cmest.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "cmest/asv.hpp"
#include "cmest/config.hpp"
#include "cmest/error.hpp"
#include "cmest/experiment.hpp"
#include "cmest/noise.hpp"
#include "cmest/optimize.hpp"
#include "cmest/report.hpp"
#include "cmest/specfun.hpp"

struct cmest_noise {
  cmest::NoiseModel model;
};

struct cmest_experiment {
  cmest::ExperimentSpec spec;
};

struct cmest_result {
  cmest::ExperimentResult result;
};

namespace {

thread_local std::string g_last_error;

cmest_status status_of(cmest::ErrorKind kind) {
  using cmest::ErrorKind;
  switch (kind) {
    case ErrorKind::Domain: return CMEST_E_DOMAIN;
    case ErrorKind::Config: return CMEST_E_CONFIG;
    case ErrorKind::Unsupported: return CMEST_E_UNSUPPORTED;
    case ErrorKind::CfZero: return CMEST_E_CF_ZERO;
    case ErrorKind::MomentUndefined: return CMEST_E_MOMENT_UNDEFINED;
    case ErrorKind::NonConvergence: return CMEST_E_NONCONVERGENCE;
    case ErrorKind::Degenerate: return CMEST_E_DEGENERATE;
    case ErrorKind::AssumptionViolated: return CMEST_E_ASSUMPTION_VIOLATED;
    case ErrorKind::RootNotFound: return CMEST_E_ROOT_NOT_FOUND;
    case ErrorKind::SingularAngle: return CMEST_E_SINGULAR_ANGLE;
  }
  return CMEST_E_INTERNAL;
}

template <class F>
cmest_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return CMEST_OK;
  } catch (const cmest::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CMEST_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CMEST_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CMEST_E_INTERNAL;
  }
}

cmest_status invalid(const char* what) {
  g_last_error = what;
  return CMEST_E_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

cmest::OutputFormat to_format(cmest_format f) {
  return f == CMEST_FORMAT_JSON ? cmest::OutputFormat::Json : cmest::OutputFormat::Csv;
}

bool valid_format(cmest_format f) { return f == CMEST_FORMAT_CSV || f == CMEST_FORMAT_JSON; }

template <class Make>
cmest_status make_noise(cmest_noise** out, Make&& make) {
  if (!out) return invalid("null output pointer");
  *out = nullptr;
  return guarded([&] { *out = new cmest_noise{make()}; });
}

}  // namespace

extern "C" {

const char* cmest_version(void) { return cmest::kVersion.data(); }

const char* cmest_last_error(void) { return g_last_error.c_str(); }

const char* cmest_status_name(cmest_status status) {
  switch (status) {
    case CMEST_OK: return "ok";
    case CMEST_E_INVALID_ARGUMENT: return "invalid argument";
    case CMEST_E_CONFIG: return "config error";
    case CMEST_E_DOMAIN: return "domain error";
    case CMEST_E_UNSUPPORTED: return "unsupported";
    case CMEST_E_CF_ZERO: return "characteristic function is zero";
    case CMEST_E_MOMENT_UNDEFINED: return "moment undefined";
    case CMEST_E_NONCONVERGENCE: return "no convergence";
    case CMEST_E_DEGENERATE: return "degenerate input";
    case CMEST_E_ASSUMPTION_VIOLATED: return "assumption violated";
    case CMEST_E_ROOT_NOT_FOUND: return "root not found";
    case CMEST_E_SINGULAR_ANGLE: return "singular angle";
    case CMEST_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void cmest_string_free(char* s) { std::free(s); }

cmest_status cmest_lambert_w0(double x, double* out) {
  if (!out) return invalid("null output pointer");
  return guarded([&] { *out = cmest::specfun::lambert_w0(x); });
}

cmest_status cmest_hyp1f1(double a, double b, double x, double* out) {
  if (!out) return invalid("null output pointer");
  return guarded([&] { *out = cmest::specfun::hyp1f1(a, b, x); });
}

cmest_status cmest_ricean_fading_penalty(double k_factor, double* out) {
  if (!out) return invalid("null output pointer");
  return guarded([&] { *out = cmest::specfun::ricean_fading_penalty(k_factor); });
}

cmest_status cmest_noise_gaussian(double variance, cmest_noise** out) {
  return make_noise(out, [&] { return cmest::NoiseModel::gaussian(variance); });
}

cmest_status cmest_noise_laplace(double variance, cmest_noise** out) {
  return make_noise(out, [&] { return cmest::NoiseModel::laplace(variance); });
}

cmest_status cmest_noise_uniform(double variance, cmest_noise** out) {
  return make_noise(out, [&] { return cmest::NoiseModel::uniform(variance); });
}

cmest_status cmest_noise_cauchy(double scale, cmest_noise** out) {
  return make_noise(out, [&] { return cmest::NoiseModel::cauchy(scale); });
}

cmest_status cmest_noise_class_a(double overlap, double background_ratio, double variance, cmest_noise** out) {
  return make_noise(out, [&] { return cmest::NoiseModel::class_a(overlap, background_ratio, variance); });
}

cmest_status cmest_noise_heterogeneous(const cmest_noise* base, cmest_scale_rule rule, double scale,
                                       cmest_noise** out) {
  if (!base) return invalid("null base noise");
  if (rule != CMEST_SCALE_BOUNDED && rule != CMEST_SCALE_LINEAR_GROWTH) return invalid("unknown scale rule");
  const auto r = rule == CMEST_SCALE_BOUNDED ? cmest::ScaleRule::Bounded : cmest::ScaleRule::LinearGrowth;
  return make_noise(out, [&] { return cmest::NoiseModel::heterogeneous(base->model, r, scale); });
}

void cmest_noise_destroy(cmest_noise* noise) { delete noise; }

cmest_status cmest_noise_cf(const cmest_noise* noise, double omega, double* out) {
  if (!noise || !out) return invalid("null argument");
  return guarded([&] { *out = cmest::cf(noise->model, omega); });
}

cmest_status cmest_noise_variance(const cmest_noise* noise, double* out) {
  if (!noise || !out) return invalid("null argument");
  return guarded([&] { *out = cmest::variance(noise->model); });
}

cmest_status cmest_noise_excess_kurtosis(const cmest_noise* noise, double* out) {
  if (!noise || !out) return invalid("null argument");
  return guarded([&] { *out = cmest::excess_kurtosis(noise->model); });
}

cmest_status cmest_asv(const cmest_noise* noise, double snr_inv, double fading_penalty, double omega,
                       double* out) {
  if (!noise || !out) return invalid("null argument");
  return guarded([&] { *out = cmest::asv_generic(cmest::AsvContext{noise->model, snr_inv, fading_penalty}, omega); });
}

cmest_status cmest_asv_upper_bound(double variance, double snr_inv, double theta_range, double* out) {
  if (!out) return invalid("null output pointer");
  return guarded([&] { *out = cmest::asv_upper_bound(variance, snr_inv, theta_range); });
}

cmest_status cmest_asv_af(double theta, double variance, double snr_inv, double* out) {
  if (!out) return invalid("null output pointer");
  return guarded([&] { *out = cmest::asv_af(theta, variance, snr_inv); });
}

cmest_status cmest_optimize_omega(const cmest_noise* noise, double snr_inv, double theta_range,
                                  cmest_omega_star* out) {
  if (!noise || !out) return invalid("null argument");
  return guarded([&] {
    const cmest::OmegaStar s = cmest::omega_star(noise->model, snr_inv, theta_range);
    out->omega = s.omega;
    out->beta = s.beta;
    out->asv_at_opt = s.asv_at_opt;
    out->clamped = s.clamped ? 1 : 0;
    out->at_origin = s.at_origin ? 1 : 0;
    out->method = cmest::method_name(s.method).data();
  });
}

cmest_status cmest_experiment_load(const char* path_or_preset, cmest_experiment** out) {
  if (!path_or_preset || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] { *out = new cmest_experiment{cmest::load_config(path_or_preset)}; });
}

cmest_status cmest_experiment_parse(const char* json_text, cmest_experiment** out) {
  if (!json_text || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] { *out = new cmest_experiment{cmest::parse_config(json_text)}; });
}

void cmest_experiment_destroy(cmest_experiment* exp) { delete exp; }

cmest_status cmest_experiment_set_seed(cmest_experiment* exp, uint64_t seed) {
  if (!exp) return invalid("null experiment");
  exp->spec.seed = seed;
  return CMEST_OK;
}

cmest_status cmest_experiment_set_threads(cmest_experiment* exp, unsigned threads) {
  if (!exp) return invalid("null experiment");
  exp->spec.threads = threads;
  return CMEST_OK;
}

cmest_status cmest_experiment_set_trials(cmest_experiment* exp, uint64_t trials) {
  if (!exp) return invalid("null experiment");
  if (trials == 0) {
    g_last_error = "trials must be >= 1";
    return CMEST_E_CONFIG;
  }
  exp->spec.trials = trials;
  return CMEST_OK;
}

cmest_status cmest_experiment_kind(const cmest_experiment* exp, const char** out) {
  if (!exp || !out) return invalid("null argument");
  *out = cmest::kind_name(exp->spec.kind).data();
  return CMEST_OK;
}

cmest_status cmest_experiment_check_tolerance(const cmest_experiment* exp, double* out) {
  if (!exp || !out) return invalid("null argument");
  *out = exp->spec.check_tolerance;
  return CMEST_OK;
}

cmest_status cmest_experiment_run(const cmest_experiment* exp, cmest_result** out) {
  if (!exp || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] { *out = new cmest_result{cmest::run_experiment(exp->spec)}; });
}

cmest_status cmest_experiment_asv_curve(const cmest_experiment* exp, cmest_result** out) {
  if (!exp || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] { *out = new cmest_result{cmest::analytic_curves(exp->spec)}; });
}

cmest_status cmest_experiment_optimize(const cmest_experiment* exp, cmest_format format, char** text) {
  if (!exp || !text) return invalid("null argument");
  if (!valid_format(format)) return invalid("unknown format");
  *text = nullptr;
  return guarded([&] {
    cmest::ResultMetadata meta;
    meta.seed = exp->spec.seed;
    meta.kind = std::string(cmest::kind_name(exp->spec.kind));
    meta.name = exp->spec.name;
    meta.config_echo = exp->spec.config_echo;
    *text = dup_string(cmest::format_omega_stars(cmest::optimize_series(exp->spec), meta, to_format(format)));
  });
}

void cmest_result_destroy(cmest_result* result) { delete result; }

cmest_status cmest_result_series_count(const cmest_result* result, size_t* out) {
  if (!result || !out) return invalid("null argument");
  *out = result->result.series.size();
  return CMEST_OK;
}

cmest_status cmest_result_series_name(const cmest_result* result, size_t series, const char** out) {
  if (!result || !out) return invalid("null argument");
  if (series >= result->result.series.size()) return invalid("series index out of range");
  *out = result->result.series[series].name.c_str();
  return CMEST_OK;
}

cmest_status cmest_result_series_nonconvergent(const cmest_result* result, size_t series, int* out) {
  if (!result || !out) return invalid("null argument");
  if (series >= result->result.series.size()) return invalid("series index out of range");
  *out = result->result.series[series].nonconvergent ? 1 : 0;
  return CMEST_OK;
}

cmest_status cmest_result_record_count(const cmest_result* result, size_t series, size_t* out) {
  if (!result || !out) return invalid("null argument");
  if (series >= result->result.series.size()) return invalid("series index out of range");
  *out = result->result.series[series].records.size();
  return CMEST_OK;
}

cmest_status cmest_result_record(const cmest_result* result, size_t series, size_t index, cmest_record* out) {
  if (!result || !out) return invalid("null argument");
  if (series >= result->result.series.size()) return invalid("series index out of range");
  const auto& records = result->result.series[series].records;
  if (index >= records.size()) return invalid("record index out of range");
  const cmest::Record& r = records[index];
  *out = cmest_record{r.sweep_value, r.n_trials, r.normalized_variance, r.std_error, r.analytic_asv,
                      r.bias, r.mse, r.median_abs_error, r.first_error, r.kurtosis,
                      r.degenerate_events, r.omega, r.sensors};
  return CMEST_OK;
}

cmest_status cmest_result_wall_time(const cmest_result* result, double* seconds) {
  if (!result || !seconds) return invalid("null argument");
  *seconds = result->result.metadata.wall_time_seconds;
  return CMEST_OK;
}

cmest_status cmest_result_format(const cmest_result* result, cmest_format format, char** text) {
  if (!result || !text) return invalid("null argument");
  if (!valid_format(format)) return invalid("unknown format");
  *text = nullptr;
  return guarded([&] { *text = dup_string(cmest::format_result(result->result, to_format(format))); });
}

cmest_status cmest_result_write(const cmest_result* result, const char* path, cmest_format format) {
  if (!result || !path) return invalid("null argument");
  if (!valid_format(format)) return invalid("unknown format");
  return guarded([&] { cmest::write_file(path, cmest::format_result(result->result, to_format(format))); });
}

cmest_status cmest_result_check(const cmest_result* result, double tolerance, size_t* failures, char** report) {
  if (!result || !failures) return invalid("null argument");
  if (report) *report = nullptr;
  return guarded([&] {
    const auto found = cmest::check_against_analytic(result->result, tolerance);
    *failures = found.size();
    if (report) {
      std::string text;
      char line[256];
      for (const auto& f : found) {
        std::snprintf(line, sizeof line, "%s @ %.6g: simulated %.6g vs analytic %.6g (rel %.3g)\n",
                      f.series.c_str(), f.sweep_value, f.simulated, f.analytic,
                      (f.simulated - f.analytic) / f.analytic);
        text += line;
      }
      *report = dup_string(text);
    }
  });
}

}  // extern "C"
