#pragma once

// Plain-text configuration: sections of `key = value` lines.
//
//   # comment
//   [profile]
//   name = lab-fh
//   anchors = [[62, 120.0], [9000, 140.0]]
//
//   [load-profile]
//   name = lab-fh-enc
//   anchors = [[0, 39], [2300, 4300]]
//   cap = 2300
//
//   [caps]
//   aes256-gcm = 1500
//
//   [cpu]
//   pt_slope = 0.0000365
//   ct_slope = 0.002
//   saturation = 1.0
//
// `anchors` is a JSON array of [x, y] pairs. Every [profile] and
// [load-profile] section defines one named curve.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "seccost/delaymodel.hpp"
#include "seccost/perfmodel.hpp"

namespace seccost {

struct Config {
  std::map<std::string, ProcessingProfile> profiles;
  std::map<std::string, LoadLatencyProfile> load_profiles;
  CipherCapTable caps = CipherCapTable::measured_e2();
  CpuModel cpu;

  /// Configured profile first, then the shipped ones. Throws ProfileError.
  ProcessingProfile profile(const std::string& name) const;
  /// Configured load profile, else fh-macsec / fh-macsec-enc.
  LoadLatencyProfile load_profile(const std::string& name) const;
};

/// Throws InvalidConfig with the offending line number.
Config parse_config(std::istream& in);
Config load_config_file(const std::string& path);

}  // namespace seccost
