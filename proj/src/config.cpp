#include "seccost/config.hpp"

#include <fstream>
#include <istream>
#include <vector>

#include "json.hpp"
#include "seccost/error.hpp"

namespace seccost {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Section {
  std::string kind;
  std::size_t line = 0;
  std::map<std::string, std::string> values;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InvalidConfig("config line " + std::to_string(line) + ": " + what);
}

double to_double(const Section& s, const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(s.line, "'" + key + "' is not a number: " + text);
  }
}

std::vector<std::pair<double, double>> parse_anchors(const Section& s) {
  auto it = s.values.find("anchors");
  if (it == s.values.end()) fail(s.line, "[" + s.kind + "] needs 'anchors'");
  std::vector<std::pair<double, double>> out;
  try {
    auto j = nlohmann::json::parse(it->second);
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("pair");
      out.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  } catch (const std::exception&) {
    fail(s.line, "'anchors' must look like [[len, delay], ...]");
  }
  return out;
}

std::string required_name(const Section& s) {
  auto it = s.values.find("name");
  if (it == s.values.end() || it->second.empty()) fail(s.line, "[" + s.kind + "] needs 'name'");
  return it->second;
}

void apply(Config& cfg, const Section& s) {
  if (s.kind == "profile") {
    std::vector<ProfileAnchor> anchors;
    for (auto [x, y] : parse_anchors(s)) anchors.push_back({x, y});
    auto name = required_name(s);
    try {
      cfg.profiles.insert_or_assign(name, ProcessingProfile(name, std::move(anchors)));
    } catch (const ProfileError& e) {
      fail(s.line, e.what());
    }
  } else if (s.kind == "load-profile") {
    std::vector<LoadLatencyAnchor> anchors;
    for (auto [x, y] : parse_anchors(s)) anchors.push_back({x, y});
    auto name = required_name(s);
    double cap = anchors.empty() ? 0 : anchors.back().offered;
    if (auto it = s.values.find("cap"); it != s.values.end()) cap = to_double(s, "cap", it->second);
    try {
      cfg.load_profiles.insert_or_assign(name, LoadLatencyProfile(name, std::move(anchors), cap));
    } catch (const ProfileError& e) {
      fail(s.line, e.what());
    }
  } else if (s.kind == "caps") {
    for (const auto& [k, v] : s.values) {
      auto c = parse_cipher(k);
      if (!c) fail(s.line, "unknown cipher '" + k + "'");
      cfg.caps.set(*c, to_double(s, k, v));
    }
  } else if (s.kind == "cpu") {
    for (const auto& [k, v] : s.values) {
      const double d = to_double(s, k, v);
      if (k == "pt_slope") {
        cfg.cpu.pt_slope = d;
      } else if (k == "ct_slope") {
        cfg.cpu.ct_slope = d;
      } else if (k == "saturation") {
        cfg.cpu.saturation = d;
      } else {
        fail(s.line, "unknown [cpu] key '" + k + "'");
      }
    }
    try {
      cfg.cpu.validate();
    } catch (const InvalidConfig& e) {
      fail(s.line, e.what());
    }
  } else {
    fail(s.line, "unknown section [" + s.kind + "]");
  }
}

}  // namespace

ProcessingProfile Config::profile(const std::string& name) const {
  if (auto it = profiles.find(name); it != profiles.end()) return it->second;
  return builtin_profile(name);
}

LoadLatencyProfile Config::load_profile(const std::string& name) const {
  if (auto it = load_profiles.find(name); it != load_profiles.end()) return it->second;
  if (name == "fh-macsec") return LoadLatencyProfile::fh_macsec(false);
  if (name == "fh-macsec-enc") return LoadLatencyProfile::fh_macsec(true);
  throw ProfileError("unknown load profile '" + name + "'");
}

Config parse_config(std::istream& in) {
  Config cfg;
  std::optional<Section> current;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      if (current) apply(cfg, *current);
      current = Section{trim(line.substr(1, line.size() - 2)), lineno, {}};
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
    if (!current) fail(lineno, "key outside of a [section]");
    current->values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  if (current) apply(cfg, *current);
  return cfg;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace seccost
