#pragma once

#include "vuf/config.hpp"

#include <json.hpp>

#include <string>

namespace vuf {

/// Runs one CLI command (root, weyl, parabolic, chow, fiber, star, qtype,
/// variety, count) and returns its JSON report. Reports depend only on the
/// config, never on timing or environment.
nlohmann::ordered_json run_command(const RunConfig& config);

/// Plain-text rendering of a report: scalars as "key: value", arrays of
/// objects as aligned tables.
std::string render_table(const nlohmann::ordered_json& report);

}  // namespace vuf
