#pragma once

// Throughput ceilings, CPU cost and load-dependent latency of the security
// data path. Rates are Mb/s; utilization is a fraction in [0, 1].

#include <map>
#include <string>
#include <vector>

#include "seccost/delaymodel.hpp"
#include "seccost/overhead.hpp"

namespace seccost {

using Mbps = double;

/// Maximum sustained ESP throughput per cipher on the measured host.
class CipherCapTable {
 public:
  CipherCapTable() = default;
  explicit CipherCapTable(std::map<Cipher, Mbps> entries);

  /// Caps measured over IPsec on the E2 link (AES128-GCM was not measured).
  static CipherCapTable measured_e2();

  /// Throws UnknownCipher when the cipher has no entry.
  Mbps cap(Cipher c) const;
  bool contains(Cipher c) const { return entries_.count(c) != 0; }
  const std::map<Cipher, Mbps>& entries() const { return entries_; }

  /// Replaces or adds one entry; the table invariants are rechecked.
  void set(Cipher c, Mbps cap);

 private:
  void validate() const;
  std::map<Cipher, Mbps> entries_;
};

Mbps achieved_throughput(Mbps attempted, Cipher cipher, const CipherCapTable& caps);

/// CPU utilization grows linearly with throughput until it saturates.
/// Slopes are stored as fraction per Mb/s: the measured "0.2 x T" percent
/// becomes 0.002.
struct CpuModel {
  double pt_slope = 0.00365 / 100.0;
  double ct_slope = 0.2 / 100.0;
  double saturation = 1.0;

  void validate() const;
  /// Fronthaul MACsec host: same slopes, utilization tops out near 80 %.
  static CpuModel fronthaul();
};

double cpu_utilization(Mbps rate, bool encrypted, const CpuModel& model = {});

struct LoadLatencyAnchor {
  Mbps offered;
  Micros added_delay;
};

/// Offered load to added processing delay, saturating at `cap`.
class LoadLatencyProfile {
 public:
  LoadLatencyProfile(std::string name, std::vector<LoadLatencyAnchor> anchors, Mbps cap);

  const std::string& name() const { return name_; }
  Mbps cap() const { return cap_; }
  const std::vector<LoadLatencyAnchor>& anchors() const { return anchors_; }

  /// Fronthaul MACsec curves: +39 us at idle up to 4.3 ms (encrypted) or
  /// 3.2 ms (integrity only) at the 2300 Mb/s ceiling.
  static LoadLatencyProfile fh_macsec(bool encrypt);

 private:
  std::string name_;
  std::vector<LoadLatencyAnchor> anchors_;
  Mbps cap_;
};

struct LoadLatency {
  Micros added_delay = 0;
  bool saturated = false;
};

LoadLatency load_latency(Mbps offered, const LoadLatencyProfile& profile);

inline constexpr Mbps kFronthaulMacsecCap = 2300.0;

}  // namespace seccost
