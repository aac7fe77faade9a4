// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmest/experiment.hpp"

namespace cmest {

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Columns: sweep_value,n_trials,normalized_variance,std_error,analytic_asv,bias.
/// Several series are separated by "# series: <name>" lines.
std::string to_csv(const ExperimentResult& result);

/// Metadata header plus every record field. Wall time is left out so that
/// repeated runs produce identical bytes.
std::string to_json(const ExperimentResult& result);

std::string format_result(const ExperimentResult& result, OutputFormat format);

std::string format_omega_stars(const std::vector<std::pair<std::string, OmegaStar>>& stars,
                               const ResultMetadata& metadata, OutputFormat format);

/// Writes text to a file. Throws Error{Config} when the file cannot be written.
void write_file(const std::string& path, const std::string& content);

}  // namespace cmest
