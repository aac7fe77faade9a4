// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmest/experiment.hpp"

namespace cmest {

/// Parses a JSON experiment description. Throws Error{Config}.
ExperimentSpec parse_config(std::string_view json_text);

/// Loads a bundled preset by name (fig1 ... fig10) or a JSON file by path.
ExperimentSpec load_config(const std::string& path_or_preset);

std::vector<std::string> preset_names();
std::optional<std::string_view> preset_text(std::string_view name);

}  // namespace cmest
