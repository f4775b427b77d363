#include "vuf/config.hpp"

#include "vuf/error.hpp"

#include <fstream>
#include <sstream>

namespace vuf {

using nlohmann::ordered_json;

#define VUF_CONFIG_FIELDS(X)                                                                              \
  X(command) X(mode) X(system) X(levi) X(profile) X(J) X(p) X(strict) X(word) X(at) X(element) X(compare) \
  X(q_levi) X(theta) X(n) X(i) X(j) X(untwisted) X(certify_normality) X(chart) X(count_points) X(polys)  \
  X(blocks) X(q) X(budget) X(output) X(table)

void to_json(ordered_json& j, const RunConfig& c) {
  j = ordered_json::object();
#define VUF_WRITE(name) j[#name] = c.name;
  VUF_CONFIG_FIELDS(VUF_WRITE)
#undef VUF_WRITE
}

void from_json(const ordered_json& j, RunConfig& c) {
  if (!j.is_object()) throw InputError("config must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
#define VUF_READ(name) \
  if (key == #name) {  \
    known = true;      \
    value.get_to(c.name); \
  }
    try {
      VUF_CONFIG_FIELDS(VUF_READ)
    } catch (const nlohmann::json::exception& e) {
      throw InputError("config key '" + key + "': " + e.what());
    }
#undef VUF_READ
    if (!known) throw InputError("unknown config key '" + key + "'");
  }
}

#undef VUF_CONFIG_FIELDS

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Drops a trailing comment that is not inside a string.
std::string strip_comment(const std::string& line) {
  char quote = 0;
  for (size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quote) {
      if (c == '\\' && quote == '"') ++k;
      else if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '#') {
      return line.substr(0, k);
    }
  }
  return line;
}

// TOML literal strings ('...') become JSON strings; the rest of the value
// syntax we accept is already JSON.
std::string literal_strings_to_json(const std::string& value) {
  std::string out;
  char quote = 0;
  for (char c : value) {
    if (quote == '\'') {
      if (c == '\'') {
        out += '"';
        quote = 0;
      } else {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
    } else if (quote == '"') {
      out += c;
      if (c == '"' && out.size() >= 2 && out[out.size() - 2] != '\\') quote = 0;
    } else {
      if (c == '\'') {
        out += '"';
        quote = '\'';
      } else {
        if (c == '"') quote = '"';
        out += c;
      }
    }
  }
  return out;
}

}  // namespace

ordered_json parse_toml_subset(const std::string& text) {
  ordered_json out = ordered_json::object();
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(strip_comment(raw));
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw InputError("config line " + std::to_string(lineno) + ": empty key");
    try {
      out[key] = ordered_json::parse(literal_strings_to_json(value));
    } catch (const nlohmann::json::parse_error&) {
      throw InputError("config line " + std::to_string(lineno) + ": cannot parse value " + value);
    }
  }
  return out;
}

ordered_json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const std::string head = trim(text);
  if (!head.empty() && head.front() == '{') {
    try {
      return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError("config " + path + ": " + e.what());
    }
  }
  return parse_toml_subset(text);
}

RunConfig merge_config(const RunConfig& base, const ordered_json& overrides) {
  RunConfig out = base;
  from_json(overrides, out);
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  for (const auto& s : out)
    if (s.empty()) throw InputError("empty entry in list '" + text + "'");
  return out;
}

LeviSubset parse_levi(const RootSystemPtr& sys, const std::vector<std::string>& names) {
  std::vector<int> gens;
  for (const auto& name : names) {
    std::string token = name;
    if (token.size() >= 2 && token[0] == 's') token = token.substr(1);
    auto i = sys->parse_simple_name(token);
    if (!i) i = sys->parse_simple_name(name);
    if (!i) throw InputError("unknown simple root '" + name + "' in " + sys->name());
    gens.push_back(*i);
  }
  return LeviSubset(sys, std::move(gens));
}

WenzelDatum make_datum(const RunConfig& c) {
  const RootSystemPtr sys = RootSystem::parse(c.system);
  if (!c.profile.empty() && !c.J.empty()) throw InputError("give either a profile or an explicit J, not both");
  if (!c.profile.empty()) {
    if (!c.levi.empty()) throw InputError("profiles describe the Borel case only");
    SimpleProfile profile;
    for (const auto& [name, e] : c.profile) {
      std::string token = name;
      if (!token.empty() && token[0] == '-') token = token.substr(1);
      auto i = sys->parse_simple_name(token);
      if (!i) throw InputError("unknown simple root '" + name + "' in profile");
      profile[*i] = e;
    }
    return WenzelDatum::from_profile(sys, profile, c.p);
  }
  std::vector<InfinitesimalRoot> entries;
  for (const auto& item : c.J) {
    const auto colon = item.rfind(':');
    std::string root = item, exponent = "1";
    if (colon != std::string::npos && item.find(']', colon) == std::string::npos) {
      root = item.substr(0, colon);
      exponent = item.substr(colon + 1);
    }
    int e = 0;
    try {
      size_t used = 0;
      e = std::stoi(exponent, &used);
      if (used != exponent.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad exponent in J entry '" + item + "'");
    }
    entries.push_back({sys->parse_root(root), e});
  }
  return WenzelDatum::from_explicit(parse_levi(sys, c.levi), std::move(entries), c.p,
                                    c.strict ? Validation::Strict : Validation::Permissive);
}

std::vector<WeylElement> parse_word(const RootSystemPtr& sys, const std::vector<std::string>& entries) {
  std::vector<WeylElement> out;
  for (const auto& e : entries) out.push_back(WeylElement::parse(sys, e));
  return out;
}

}  // namespace vuf
