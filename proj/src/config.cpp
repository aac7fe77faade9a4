// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include "cmest/config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cmest/error.hpp"

namespace cmest {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 10> kPresetNames = {"fig1", "fig2", "fig3", "fig4", "fig5",
                                                            "fig6", "fig7", "fig8", "fig9", "fig10"};
constexpr std::array<std::string_view, 10> kPresets = {
#include "presets.inc"
};

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorKind::Config, where + ": " + what);
}

void allow_keys(const json& j, const std::string& where, std::initializer_list<std::string_view> keys) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const auto& [k, _] : j.items()) {
    bool known = false;
    for (auto allowed : keys) known = known || k == allowed;
    if (!known) bad(where, "unknown key '" + k + "'");
  }
}

const json& require(const json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing '") + key + "'");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(where, "must be finite");
  return v;
}

double number_or(const json& j, const char* key, const std::string& where, double fallback) {
  auto it = j.find(key);
  return it == j.end() ? fallback : number(*it, where + "." + key);
}

std::uint64_t unsigned_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
    bad(where, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

NoiseModel parse_noise(const json& j, const std::string& where) {
  const std::string model = text(require(j, where, "model"), where + ".model");
  if (model == "gaussian" || model == "laplace" || model == "uniform") {
    allow_keys(j, where, {"model", "variance"});
    const double var = number(require(j, where, "variance"), where + ".variance");
    if (model == "gaussian") return NoiseModel::gaussian(var);
    if (model == "laplace") return NoiseModel::laplace(var);
    return NoiseModel::uniform(var);
  }
  if (model == "cauchy") {
    // no variance exists; a nominal one is accepted and the scale defaults to 1
    allow_keys(j, where, {"model", "scale", "variance"});
    return NoiseModel::cauchy(number_or(j, "scale", where, 1.0));
  }
  if (model == "class-a") {
    allow_keys(j, where, {"model", "A", "T", "variance"});
    return NoiseModel::class_a(number(require(j, where, "A"), where + ".A"),
                               number(require(j, where, "T"), where + ".T"),
                               number(require(j, where, "variance"), where + ".variance"));
  }
  if (model == "heterogeneous") {
    allow_keys(j, where, {"model", "rule", "scale", "base"});
    const std::string rule = text(require(j, where, "rule"), where + ".rule");
    ScaleRule r;
    if (rule == "bounded")
      r = ScaleRule::Bounded;
    else if (rule == "linear-growth")
      r = ScaleRule::LinearGrowth;
    else
      bad(where + ".rule", "expected bounded or linear-growth");
    return NoiseModel::heterogeneous(parse_noise(require(j, where, "base"), where + ".base"), r,
                                     number_or(j, "scale", where, 1.0));
  }
  bad(where + ".model", "unknown noise model '" + model + "'");
}

PowerMode parse_power(const json& j, const std::string& where) {
  allow_keys(j, where, {"mode", "value"});
  const std::string mode = text(require(j, where, "mode"), where + ".mode");
  const double value = number(require(j, where, "value"), where + ".value");
  if (mode == "total") return TotalPower{value};
  if (mode == "per-sensor") return PerSensorPower{value};
  bad(where + ".mode", "expected total or per-sensor");
}

FadingModel parse_fading(const json& j, const std::string& where) {
  std::string model;
  if (j.is_string()) {
    model = j.get<std::string>();
  } else {
    allow_keys(j, where, {"model", "k"});
    model = text(require(j, where, "model"), where + ".model");
  }
  if (model == "none") return NoFading{};
  if (model == "rayleigh") return RayleighFading{};
  if (model == "ricean") {
    if (!j.is_object()) bad(where, "ricean fading needs a k factor");
    const double k = number(require(j, where, "k"), where + ".k");
    if (!(k >= 0.0)) bad(where + ".k", "must be >= 0");
    return RiceanFading{k};
  }
  bad(where, "unknown fading model '" + model + "'");
}

OmegaChoice parse_omega(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() != "optimal") bad(where, "expected \"optimal\" or a number");
    return {true, 0.0};
  }
  return {false, number(j, where)};
}

std::size_t parse_sensors(const json& j, const std::string& where) {
  const std::uint64_t v = unsigned_integer(j, where);
  if (v < 1) bad(where, "must be >= 1");
  return static_cast<std::size_t>(v);
}

Scheme parse_scheme(const json& j, const std::string& where) {
  const std::string s = text(j, where);
  if (s == "cm") return Scheme::ConstantModulus;
  if (s == "af") return Scheme::AmplifyForward;
  bad(where, "expected cm or af");
}

void parse_sweep(const json& j, ExperimentSpec& spec) {
  const std::string where = "sweep";
  allow_keys(j, where, {"variable", "values", "grid"});
  const std::string var = text(require(j, where, "variable"), "sweep.variable");
  if (var == "omega")
    spec.sweep_variable = SweepVariable::Omega;
  else if (var == "sensors")
    spec.sweep_variable = SweepVariable::Sensors;
  else if (var == "theta")
    spec.sweep_variable = SweepVariable::Theta;
  else
    bad("sweep.variable", "expected omega, sensors or theta");

  const bool has_values = j.contains("values");
  const bool has_grid = j.contains("grid");
  if (has_values == has_grid) bad(where, "give exactly one of 'values' or 'grid'");
  spec.sweep.clear();
  if (has_values) {
    const json& values = j.at("values");
    if (!values.is_array()) bad("sweep.values", "expected an array");
    for (std::size_t i = 0; i < values.size(); ++i)
      spec.sweep.push_back(number(values[i], "sweep.values[" + std::to_string(i) + "]"));
  } else {
    const json& g = j.at("grid");
    allow_keys(g, "sweep.grid", {"min", "max", "points", "spacing"});
    const double lo = number(require(g, "sweep.grid", "min"), "sweep.grid.min");
    const double hi = number(require(g, "sweep.grid", "max"), "sweep.grid.max");
    const std::uint64_t n = unsigned_integer(require(g, "sweep.grid", "points"), "sweep.grid.points");
    const std::string spacing = g.contains("spacing") ? text(g.at("spacing"), "sweep.grid.spacing") : "linear";
    if (n < 1 || n > 1000000) bad("sweep.grid.points", "must be in [1, 1e6]");
    if (!(hi >= lo)) bad("sweep.grid", "max must be >= min");
    const bool log = spacing == "log";
    if (!log && spacing != "linear") bad("sweep.grid.spacing", "expected linear or log");
    if (log && !(lo > 0.0)) bad("sweep.grid", "log spacing needs min > 0");
    for (std::uint64_t i = 0; i < n; ++i) {
      const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
      spec.sweep.push_back(log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
    }
    if (n > 1) spec.sweep.back() = hi;
  }
}

void parse_network(const json& j, ExperimentSpec& spec) {
  const std::string w = "network";
  allow_keys(j, w, {"sensors", "theta", "theta_range", "omega", "power", "channel_noise_variance",
                    "fading", "noise"});
  NetworkConfig& n = spec.network;
  n.sensors = parse_sensors(require(j, w, "sensors"), "network.sensors");
  n.theta = number(require(j, w, "theta"), "network.theta");
  n.theta_range = number(require(j, w, "theta_range"), "network.theta_range");
  n.power = parse_power(require(j, w, "power"), "network.power");
  n.channel_noise_variance = number_or(j, "channel_noise_variance", w, 1.0);
  n.fading = j.contains("fading") ? parse_fading(j.at("fading"), "network.fading") : FadingModel{NoFading{}};
  n.noise = parse_noise(require(j, w, "noise"), "network.noise");
  spec.omega = j.contains("omega") ? parse_omega(j.at("omega"), "network.omega") : OmegaChoice{true, 0.0};
  if (!spec.omega.optimal) n.omega = spec.omega.value;
}

SeriesSpec parse_series(const json& j, const std::string& w) {
  allow_keys(j, w, {"name", "scheme", "noise", "fading", "power", "sensors", "theta", "omega"});
  SeriesSpec s;
  s.name = text(require(j, w, "name"), w + ".name");
  if (j.contains("scheme")) s.scheme = parse_scheme(j.at("scheme"), w + ".scheme");
  if (j.contains("noise")) s.noise = parse_noise(j.at("noise"), w + ".noise");
  if (j.contains("fading")) s.fading = parse_fading(j.at("fading"), w + ".fading");
  if (j.contains("power")) s.power = parse_power(j.at("power"), w + ".power");
  if (j.contains("sensors")) s.sensors = parse_sensors(j.at("sensors"), w + ".sensors");
  if (j.contains("theta")) s.theta = number(j.at("theta"), w + ".theta");
  if (j.contains("omega")) s.omega = parse_omega(j.at("omega"), w + ".omega");
  return s;
}

ExperimentSpec parse_document(const json& doc) {
  allow_keys(doc, "config", {"name", "kind", "seed", "trials", "threads", "check_tolerance",
                             "af_nominal_variance", "network", "sweep", "series"});
  ExperimentSpec spec;
  spec.name = doc.contains("name") ? text(doc.at("name"), "name") : std::string("experiment");
  const std::string kind = text(require(doc, "config", "kind"), "kind");
  const auto k = parse_kind(kind);
  if (!k) bad("kind", "unknown experiment kind '" + kind + "'");
  spec.kind = *k;
  if (doc.contains("seed")) spec.seed = unsigned_integer(doc.at("seed"), "seed");
  if (doc.contains("trials")) spec.trials = unsigned_integer(doc.at("trials"), "trials");
  if (doc.contains("threads")) {
    const std::uint64_t t = unsigned_integer(doc.at("threads"), "threads");
    if (t > 4096) bad("threads", "must be <= 4096");
    spec.threads = static_cast<unsigned>(t);
  }
  spec.check_tolerance = number_or(doc, "check_tolerance", "config", spec.check_tolerance);
  spec.af_nominal_variance = number_or(doc, "af_nominal_variance", "config", spec.af_nominal_variance);
  parse_network(require(doc, "config", "network"), spec);
  parse_sweep(require(doc, "config", "sweep"), spec);
  if (doc.contains("series")) {
    const json& series = doc.at("series");
    if (!series.is_array()) bad("series", "expected an array");
    for (std::size_t i = 0; i < series.size(); ++i)
      spec.series.push_back(parse_series(series[i], "series[" + std::to_string(i) + "]"));
  }
  spec.config_echo = doc.dump();
  spec.validate();
  return spec;
}

}  // namespace

ExperimentSpec parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::exception& e) {
    fail(ErrorKind::Config, std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_document(doc);
  } catch (const Error& e) {
    // model constructors report bad parameters as domain errors
    if (e.kind() == ErrorKind::Domain) fail(ErrorKind::Config, e.what());
    throw;
  } catch (const json::exception& e) {
    fail(ErrorKind::Config, e.what());
  }
}

ExperimentSpec load_config(const std::string& path_or_preset) {
  if (auto preset = preset_text(path_or_preset)) return parse_config(*preset);
  std::ifstream in(path_or_preset, std::ios::binary);
  if (!in) fail(ErrorKind::Config, "cannot open config '" + path_or_preset + "' (and no preset has that name)");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<std::string> preset_names() { return {kPresetNames.begin(), kPresetNames.end()}; }

std::optional<std::string_view> preset_text(std::string_view name) {
  for (std::size_t i = 0; i < kPresetNames.size(); ++i)
    if (kPresetNames[i] == name) return kPresets[i];
  return std::nullopt;
}

}  // namespace cmest
