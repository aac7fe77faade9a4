// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#include "cmest/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cmest/error.hpp"

namespace cmest {
namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json metadata_json(const ResultMetadata& m) {
  ordered_json j;
  j["seed"] = m.seed;
  j["kind"] = m.kind;
  j["name"] = m.name;
  j["version"] = m.version;
  j["threads"] = m.threads;
  if (m.config_echo.empty())
    j["config"] = nullptr;
  else
    j["config"] = ordered_json::parse(m.config_echo);
  return j;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string to_csv(const ExperimentResult& result) {
  std::string out;
  const bool multi = result.series.size() > 1;
  for (const auto& s : result.series) {
    if (multi) out += "# series: " + s.name + "\n";
    out += "sweep_value,n_trials,normalized_variance,std_error,analytic_asv,bias\n";
    for (const auto& r : s.records) {
      out += fmt(r.sweep_value) + ',' + std::to_string(r.n_trials) + ',' + fmt(r.normalized_variance) + ',' +
             fmt(r.std_error) + ',' + fmt(r.analytic_asv) + ',' + fmt(r.bias) + '\n';
    }
  }
  return out;
}

std::string to_json(const ExperimentResult& result) {
  ordered_json doc;
  doc["metadata"] = metadata_json(result.metadata);
  ordered_json series = ordered_json::array();
  for (const auto& s : result.series) {
    ordered_json js;
    js["name"] = s.name;
    js["scheme"] = s.scheme == Scheme::AmplifyForward ? "af" : "cm";
    js["nonconvergent"] = s.nonconvergent;
    ordered_json records = ordered_json::array();
    for (const auto& r : s.records) {
      ordered_json jr;
      jr["sweep_value"] = num(r.sweep_value);
      jr["n_trials"] = r.n_trials;
      jr["normalized_variance"] = num(r.normalized_variance);
      jr["std_error"] = num(r.std_error);
      jr["analytic_asv"] = num(r.analytic_asv);
      jr["bias"] = num(r.bias);
      jr["mse"] = num(r.mse);
      jr["median_abs_error"] = num(r.median_abs_error);
      jr["first_error"] = num(r.first_error);
      jr["kurtosis"] = num(r.kurtosis);
      jr["degenerate_events"] = r.degenerate_events;
      jr["omega"] = num(r.omega);
      jr["sensors"] = r.sensors;
      records.push_back(std::move(jr));
    }
    js["records"] = std::move(records);
    series.push_back(std::move(js));
  }
  doc["series"] = std::move(series);
  return doc.dump(2) + "\n";
}

std::string format_result(const ExperimentResult& result, OutputFormat format) {
  return format == OutputFormat::Csv ? to_csv(result) : to_json(result);
}

std::string format_omega_stars(const std::vector<std::pair<std::string, OmegaStar>>& stars,
                               const ResultMetadata& metadata, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "series,omega,beta,clamped,at_origin,asv_at_opt,method\n";
    for (const auto& [name, s] : stars) {
      out += name + ',' + fmt(s.omega) + ',' + fmt(s.beta) + ',' + (s.clamped ? "1" : "0") + ',' +
             (s.at_origin ? "1" : "0") + ',' + fmt(s.asv_at_opt) + ',' + std::string(method_name(s.method)) + '\n';
    }
    return out;
  }
  ordered_json doc;
  doc["metadata"] = metadata_json(metadata);
  ordered_json arr = ordered_json::array();
  for (const auto& [name, s] : stars) {
    ordered_json j;
    j["series"] = name;
    j["omega"] = num(s.omega);
    j["beta"] = num(s.beta);
    j["clamped"] = s.clamped;
    j["at_origin"] = s.at_origin;
    j["asv_at_opt"] = num(s.asv_at_opt);
    j["method"] = std::string(method_name(s.method));
    arr.push_back(std::move(j));
  }
  doc["optima"] = std::move(arr);
  return doc.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Config, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(ErrorKind::Config, "write to '" + path + "' failed");
}

}  // namespace cmest
