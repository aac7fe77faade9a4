// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through the C interface.
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cmest/cmest.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitCheck = 4;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<unsigned> threads;
  std::optional<double> tolerance;
  std::string out;
  std::string format = "csv";
  bool check = false;
};

struct ExperimentDeleter {
  void operator()(cmest_experiment* p) const { cmest_experiment_destroy(p); }
};
struct ResultDeleter {
  void operator()(cmest_result* p) const { cmest_result_destroy(p); }
};
struct TextDeleter {
  void operator()(char* p) const { cmest_string_free(p); }
};
using ExperimentPtr = std::unique_ptr<cmest_experiment, ExperimentDeleter>;
using ResultPtr = std::unique_ptr<cmest_result, ResultDeleter>;
using TextPtr = std::unique_ptr<char, TextDeleter>;

struct Failure {
  int code;
};

int exit_code(cmest_status s) {
  return (s == CMEST_E_CONFIG || s == CMEST_E_INVALID_ARGUMENT) ? kExitConfig : kExitNumeric;
}

void ok(cmest_status s) {
  if (s == CMEST_OK) return;
  std::cerr << "error: " << cmest_status_name(s) << ": " << cmest_last_error() << '\n';
  throw Failure{exit_code(s)};
}

cmest_format format_of(const Options& o) { return o.format == "json" ? CMEST_FORMAT_JSON : CMEST_FORMAT_CSV; }

void emit(const Options& o, const char* text) {
  if (o.out.empty()) {
    std::fputs(text, stdout);
    return;
  }
  std::FILE* f = std::fopen(o.out.c_str(), "wb");
  if (!f) {
    std::cerr << "error: cannot open '" << o.out << "' for writing\n";
    throw Failure{kExitConfig};
  }
  const bool written = std::fputs(text, f) >= 0;
  if (std::fclose(f) != 0 || !written) {
    std::cerr << "error: write to '" << o.out << "' failed\n";
    throw Failure{kExitConfig};
  }
}

ExperimentPtr load(const Options& o, const char* expected_kind) {
  cmest_experiment* raw = nullptr;
  ok(cmest_experiment_load(o.config.c_str(), &raw));
  ExperimentPtr exp(raw);
  if (expected_kind) {
    const char* kind = nullptr;
    ok(cmest_experiment_kind(exp.get(), &kind));
    if (std::string(kind) != expected_kind) {
      std::cerr << "error: config kind is '" << kind << "', this command runs '" << expected_kind << "'\n";
      throw Failure{kExitConfig};
    }
  }
  if (o.seed) ok(cmest_experiment_set_seed(exp.get(), *o.seed));
  if (o.trials) ok(cmest_experiment_set_trials(exp.get(), *o.trials));
  if (o.threads) ok(cmest_experiment_set_threads(exp.get(), *o.threads));
  return exp;
}

int run_simulation(const Options& o, const char* expected_kind) {
  ExperimentPtr exp = load(o, expected_kind);
  cmest_result* raw = nullptr;
  ok(cmest_experiment_run(exp.get(), &raw));
  ResultPtr result(raw);

  double seconds = 0.0;
  ok(cmest_result_wall_time(result.get(), &seconds));
  std::fprintf(stderr, "wall time: %.3f s\n", seconds);

  char* text = nullptr;
  ok(cmest_result_format(result.get(), format_of(o), &text));
  TextPtr owned(text);
  emit(o, text);

  if (!o.check) return kExitOk;
  double tol = 0.0;
  ok(cmest_experiment_check_tolerance(exp.get(), &tol));
  if (o.tolerance) tol = *o.tolerance;
  std::size_t failures = 0;
  char* report = nullptr;
  ok(cmest_result_check(result.get(), tol, &failures, &report));
  TextPtr owned_report(report);
  if (failures == 0) {
    std::fprintf(stderr, "check: all points within %.3g of the analytic AsV\n", tol);
    return kExitOk;
  }
  std::fprintf(stderr, "check: %zu point(s) outside %.3g\n%s", failures, tol, report);
  return kExitCheck;
}

int run_asv_curve(const Options& o) {
  ExperimentPtr exp = load(o, nullptr);
  cmest_result* raw = nullptr;
  ok(cmest_experiment_asv_curve(exp.get(), &raw));
  ResultPtr result(raw);
  char* text = nullptr;
  ok(cmest_result_format(result.get(), format_of(o), &text));
  TextPtr owned(text);
  emit(o, text);
  return kExitOk;
}

int run_optimize(const Options& o) {
  ExperimentPtr exp = load(o, nullptr);
  char* text = nullptr;
  ok(cmest_experiment_optimize(exp.get(), format_of(o), &text));
  TextPtr owned(text);
  emit(o, text);
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "JSON config file or preset name (fig1 ... fig10)")->required();
  sub->add_option("--seed", o.seed, "root seed (overrides the config)");
  sub->add_option("--trials", o.trials, "trials per sweep point (overrides the config)")->check(CLI::PositiveNumber);
  sub->add_option("--threads", o.threads, "worker threads, 0 = all cores");
  sub->add_option("--out", o.out, "output file (default: stdout)");
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-modulus distributed estimation simulator"};
  app.set_version_flag("--version", std::string(cmest_version()));
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    const char* kind;  // required experiment kind, nullptr for any
    bool simulate;
  };
  const Command commands[] = {
      {"asv-curve", "analytic AsV curves for every series", nullptr, false},
      {"optimize-omega", "optimal transmit phase per series", nullptr, false},
      {"simulate", "Monte Carlo run of any experiment kind", nullptr, true},
      {"compare-af", "constant-modulus vs amplify-and-forward", "af-compare", true},
      {"fading", "fading penalty comparison", "fading-compare", true},
      {"robustness", "Cauchy robustness run", "cauchy-robustness", true},
      {"hetero", "non-identically distributed sensing noise", "heterogeneous-consistency", true},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o);
    if (c.simulate) {
      sub->add_flag("--check", o.check, "exit 4 unless simulation matches the analytic AsV");
      sub->add_option("--tolerance", o.tolerance, "relative tolerance for --check (default from config)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    for (const auto& c : commands) {
      if (!app.got_subcommand(c.name)) continue;
      const std::string name = c.name;
      if (name == "asv-curve") return run_asv_curve(o);
      if (name == "optimize-omega") return run_optimize(o);
      return run_simulation(o, c.kind);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitConfig;
}
