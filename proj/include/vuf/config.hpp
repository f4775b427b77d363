#pragma once

#include "vuf/fibers.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vuf {

/// Everything a CLI run needs. Field names double as the config-file keys.
struct RunConfig {
  std::string command;
  std::string mode;  // fiber: first|last|cell; variety: builder name

  std::string system = "A2";
  std::vector<std::string> levi;                  // simple names generating P_red; empty for B
  std::map<std::string, int> profile;             // simple name -> exponent
  std::vector<std::string> J;                     // "root:exponent"
  int p = 2;
  bool strict = false;

  std::vector<std::string> word;  // BSDH entries
  std::string at;                 // fixed point v
  std::string element;            // weyl / cell / qtype element
  std::string compare;            // second element for weyl
  std::vector<std::string> q_levi;
  std::vector<int> theta;

  int n = 2;
  int i = 0;
  int j = 0;
  bool untwisted = false;
  bool certify_normality = false;
  std::vector<std::string> chart;
  std::vector<std::int64_t> count_points;

  std::vector<std::string> polys;
  std::vector<std::string> blocks;  // comma-separated variable names per block
  std::int64_t q = 0;
  std::int64_t budget = 100'000'000;

  std::string output;
  bool table = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

void to_json(nlohmann::ordered_json& j, const RunConfig& c);
void from_json(const nlohmann::ordered_json& j, RunConfig& c);

/// Reads a config file: JSON when the text starts with '{', otherwise the flat
/// TOML subset (key = value lines, '#' comments, [section] headers ignored).
nlohmann::ordered_json read_config_file(const std::string& path);
nlohmann::ordered_json parse_toml_subset(const std::string& text);

/// Applies the keys present in `overrides` on top of `base`.
RunConfig merge_config(const RunConfig& base, const nlohmann::ordered_json& overrides);

/// Splits on commas that are not inside brackets, trimming whitespace.
std::vector<std::string> split_list(const std::string& text);

/// Input builders shared by the CLI and the tests.
LeviSubset parse_levi(const RootSystemPtr& sys, const std::vector<std::string>& names);
WenzelDatum make_datum(const RunConfig& c);
std::vector<WeylElement> parse_word(const RootSystemPtr& sys, const std::vector<std::string>& entries);

}  // namespace vuf
