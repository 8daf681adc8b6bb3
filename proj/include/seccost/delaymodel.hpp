#pragma once

// Per-node delay decomposition: queuing + propagation + transmission +
// processing. Every delay is a double in microseconds.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seccost/overhead.hpp"

namespace seccost {

using Micros = double;

inline constexpr double kDefaultPropSpeed = 2e8;  // m/s, copper/fiber
inline constexpr double kTenGigabit = 10e9;

struct LinkSpec {
  double rate_bps = kTenGigabit;
  double length_m = 100.0;
  double prop_speed_mps = kDefaultPropSpeed;

  void validate() const;
};

struct DelayBreakdown {
  Micros queuing = 0;
  Micros propagation = 0;
  Micros transmission = 0;
  Micros processing = 0;
  Micros total = 0;
};

/// Rates are in packets per second. `overhead_rate` is the extra
/// packet-equivalents per second that security framing adds to the arrivals.
struct QueueModel {
  double service_rate = 0;
  double arrival_rate = 0;
  double overhead_rate = 0;
};

struct ProfileAnchor {
  double packet_len;  // bytes
  Micros delay;
};

/// Measured packet-size to processing-delay curve. Evaluated by linear
/// interpolation between anchors and clamped to the end anchors outside
/// them. Only the quoted end points of the measured curves are known, so the
/// interpolated shape in between is an assumption.
class ProcessingProfile {
 public:
  /// Throws ProfileError unless there are >= 2 anchors, strictly increasing
  /// in length, with non-negative delays.
  ProcessingProfile(std::string name, std::vector<ProfileAnchor> anchors);

  const std::string& name() const { return name_; }
  std::span<const ProfileAnchor> anchors() const { return anchors_; }

  Micros at(double packet_len) const;

  /// Pointwise sum of two profiles. Exact: both are linear between the union
  /// of their anchor lengths and constant outside it.
  ProcessingProfile plus(const ProcessingProfile& delta, std::string name) const;

  /// Constant profile, handy for tests and "no processing" runs.
  static ProcessingProfile constant(std::string name, Micros delay);

 private:
  std::string name_;
  std::vector<ProfileAnchor> anchors_;
};

Micros transmission_delay(Bytes frame_len, const LinkSpec& link);
Micros propagation_delay(const LinkSpec& link);

/// M/M/1 waiting time 1/(mu - lambda) - 1/mu. Throws UnstableQueue when
/// lambda >= mu.
Micros queuing_delay(const QueueModel& q);

/// Extra waiting caused by the security overhead:
/// 1/(mu - (lambda + eps)) - 1/(mu - lambda). Throws UnstableQueue when
/// lambda + eps >= mu.
Micros queuing_delta(const QueueModel& q);

/// Converts bit rates to the packet rates the queue formulas need.
/// mu = link/(8 M), lambda = load/(8 M), eps = lambda * overhead / M.
QueueModel rates_from_bits(double link_rate_bps, double offered_load_bps, Bytes mean_frame,
                           Bytes overhead);

/// Largest offered load (b/s) whose queuing_delta stays <= max_delta under
/// rates_from_bits. Found by bisection on [0, link_rate).
double max_load_for_queuing_delta(double link_rate_bps, Bytes mean_frame, Bytes overhead,
                                  Micros max_delta);

Micros processing_delay(Bytes frame_len, const ProcessingProfile& profile);

DelayBreakdown total_delay(Micros queuing, Micros propagation, Micros transmission,
                           Micros processing);

/// Solves the four-term sum for the processing term given a measured total.
Micros processing_from_total(Micros total, Micros queuing, Micros propagation,
                             Micros transmission);

/// One-way delay of a single frame through one node.
DelayBreakdown one_way_delay(Bytes frame_len, const LinkSpec& link,
                             const ProcessingProfile& profile, Micros queuing = 0);

/// 2 * (processing + transmission + propagation), no queuing.
Micros rtt_estimate(Bytes frame_len, const LinkSpec& link, const ProcessingProfile& profile);

// Shipped profiles.
//   e2-pt          flat 60.97 us over 62..1500 B
//   e2-aes256cbc   e2-pt + 22 us at 62 B rising to +50 us at 1500 B
//   e2-aes256gcm   identical to e2-pt
//   fh-pt          flat baseline (default 118 us) over 62..9000 B
//   fh-macsec      fh-pt + 39 us up to 1500 B rising to +153 us at 9000 B
//   fh-macsec-enc  fh-pt + 39 us up to 1500 B rising to +218 us at 9000 B
// The fronthaul deltas are convex: small frames share the same +39 us and
// the cost grows only past the standard 1500 B Ethernet MTU.
ProcessingProfile e2_pt_profile(Micros sack_delay = 60.97, Micros slope_delta = 0.0);
ProcessingProfile e2_aes256cbc_profile();
ProcessingProfile e2_aes256gcm_profile();
ProcessingProfile fh_pt_profile(Micros small = 118.0, Micros large = 118.0);
ProcessingProfile fh_macsec_delta(bool encrypt);
ProcessingProfile fh_macsec_profile(bool encrypt, const ProcessingProfile& baseline = fh_pt_profile());

std::vector<std::string> builtin_profile_names();
/// Throws ProfileError for an unknown name.
ProcessingProfile builtin_profile(const std::string& name);

}  // namespace seccost
