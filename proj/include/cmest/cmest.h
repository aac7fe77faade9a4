// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

/* C interface to the cmest library. Every call returns a status code; on
 * failure cmest_last_error() describes the most recent error of the calling
 * thread. Handles are opaque and owned by the caller. */
#ifndef CMEST_CMEST_H
#define CMEST_CMEST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CMEST_API __declspec(dllexport)
#else
#define CMEST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cmest_status {
  CMEST_OK = 0,
  CMEST_E_INVALID_ARGUMENT = 1, /* null pointer, index out of range */
  CMEST_E_CONFIG = 2,
  CMEST_E_DOMAIN = 3,
  CMEST_E_UNSUPPORTED = 4,
  CMEST_E_CF_ZERO = 5,
  CMEST_E_MOMENT_UNDEFINED = 6,
  CMEST_E_NONCONVERGENCE = 7,
  CMEST_E_DEGENERATE = 8,
  CMEST_E_ASSUMPTION_VIOLATED = 9,
  CMEST_E_ROOT_NOT_FOUND = 10,
  CMEST_E_SINGULAR_ANGLE = 11,
  CMEST_E_INTERNAL = 12
} cmest_status;

typedef enum cmest_format { CMEST_FORMAT_CSV = 0, CMEST_FORMAT_JSON = 1 } cmest_format;

typedef enum cmest_scale_rule { CMEST_SCALE_BOUNDED = 0, CMEST_SCALE_LINEAR_GROWTH = 1 } cmest_scale_rule;

typedef struct cmest_noise cmest_noise;
typedef struct cmest_experiment cmest_experiment;
typedef struct cmest_result cmest_result;

typedef struct cmest_omega_star {
  double omega;
  double beta;
  double asv_at_opt;
  int clamped;
  int at_origin;
  const char* method; /* static string */
} cmest_omega_star;

typedef struct cmest_record {
  double sweep_value;
  uint64_t n_trials;
  double normalized_variance;
  double std_error;
  double analytic_asv;
  double bias;
  double mse;
  double median_abs_error;
  double first_error;
  double kurtosis;
  uint64_t degenerate_events;
  double omega;
  size_t sensors;
} cmest_record;

CMEST_API const char* cmest_version(void);
CMEST_API const char* cmest_last_error(void);
CMEST_API const char* cmest_status_name(cmest_status status);
CMEST_API void cmest_string_free(char* s);

/* special functions */
CMEST_API cmest_status cmest_lambert_w0(double x, double* out);
CMEST_API cmest_status cmest_hyp1f1(double a, double b, double x, double* out);
CMEST_API cmest_status cmest_ricean_fading_penalty(double k_factor, double* out);

/* sensing noise */
CMEST_API cmest_status cmest_noise_gaussian(double variance, cmest_noise** out);
CMEST_API cmest_status cmest_noise_laplace(double variance, cmest_noise** out);
CMEST_API cmest_status cmest_noise_uniform(double variance, cmest_noise** out);
CMEST_API cmest_status cmest_noise_cauchy(double scale, cmest_noise** out);
CMEST_API cmest_status cmest_noise_class_a(double overlap, double background_ratio, double variance,
                                           cmest_noise** out);
CMEST_API cmest_status cmest_noise_heterogeneous(const cmest_noise* base, cmest_scale_rule rule, double scale,
                                                 cmest_noise** out);
CMEST_API void cmest_noise_destroy(cmest_noise* noise);
CMEST_API cmest_status cmest_noise_cf(const cmest_noise* noise, double omega, double* out);
CMEST_API cmest_status cmest_noise_variance(const cmest_noise* noise, double* out);
CMEST_API cmest_status cmest_noise_excess_kurtosis(const cmest_noise* noise, double* out);

/* asymptotic variance and transmit phase */
CMEST_API cmest_status cmest_asv(const cmest_noise* noise, double snr_inv, double fading_penalty, double omega,
                                 double* out);
CMEST_API cmest_status cmest_asv_upper_bound(double variance, double snr_inv, double theta_range, double* out);
CMEST_API cmest_status cmest_asv_af(double theta, double variance, double snr_inv, double* out);
CMEST_API cmest_status cmest_optimize_omega(const cmest_noise* noise, double snr_inv, double theta_range,
                                            cmest_omega_star* out);

/* experiments; path_or_preset names a JSON file or a bundled preset (fig1 ... fig10) */
CMEST_API cmest_status cmest_experiment_load(const char* path_or_preset, cmest_experiment** out);
CMEST_API cmest_status cmest_experiment_parse(const char* json_text, cmest_experiment** out);
CMEST_API void cmest_experiment_destroy(cmest_experiment* exp);
CMEST_API cmest_status cmest_experiment_set_seed(cmest_experiment* exp, uint64_t seed);
CMEST_API cmest_status cmest_experiment_set_threads(cmest_experiment* exp, unsigned threads);
CMEST_API cmest_status cmest_experiment_set_trials(cmest_experiment* exp, uint64_t trials);
CMEST_API cmest_status cmest_experiment_kind(const cmest_experiment* exp, const char** out);
CMEST_API cmest_status cmest_experiment_check_tolerance(const cmest_experiment* exp, double* out);
CMEST_API cmest_status cmest_experiment_run(const cmest_experiment* exp, cmest_result** out);
CMEST_API cmest_status cmest_experiment_asv_curve(const cmest_experiment* exp, cmest_result** out);
/* optimal omega per series, formatted; free the text with cmest_string_free */
CMEST_API cmest_status cmest_experiment_optimize(const cmest_experiment* exp, cmest_format format, char** text);

/* results */
CMEST_API void cmest_result_destroy(cmest_result* result);
CMEST_API cmest_status cmest_result_series_count(const cmest_result* result, size_t* out);
CMEST_API cmest_status cmest_result_series_name(const cmest_result* result, size_t series, const char** out);
CMEST_API cmest_status cmest_result_series_nonconvergent(const cmest_result* result, size_t series, int* out);
CMEST_API cmest_status cmest_result_record_count(const cmest_result* result, size_t series, size_t* out);
CMEST_API cmest_status cmest_result_record(const cmest_result* result, size_t series, size_t index,
                                           cmest_record* out);
CMEST_API cmest_status cmest_result_wall_time(const cmest_result* result, double* seconds);
CMEST_API cmest_status cmest_result_format(const cmest_result* result, cmest_format format, char** text);
CMEST_API cmest_status cmest_result_write(const cmest_result* result, const char* path, cmest_format format);
/* Compares simulation with the analytic AsV. report (may be NULL) receives one
 * line per failing point; free it with cmest_string_free. */
CMEST_API cmest_status cmest_result_check(const cmest_result* result, double tolerance, size_t* failures,
                                          char** report);

#ifdef __cplusplus
}
#endif

#endif /* CMEST_CMEST_H */
