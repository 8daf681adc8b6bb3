#include "seccost/delaymodel.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "seccost/error.hpp"

namespace seccost {
namespace {

constexpr double kMicrosPerSecond = 1e6;

void require_finite(Micros v, const char* what) {
  if (!std::isfinite(v)) throw InvalidConfig(std::string(what) + " delay must be finite");
}

}  // namespace

void LinkSpec::validate() const {
  if (!(rate_bps > 0)) throw InvalidConfig("link rate must be positive");
  if (!(length_m >= 0)) throw InvalidConfig("link length must be non-negative");
  if (!(prop_speed_mps > 0)) throw InvalidConfig("propagation speed must be positive");
}

ProcessingProfile::ProcessingProfile(std::string name, std::vector<ProfileAnchor> anchors)
    : name_(std::move(name)), anchors_(std::move(anchors)) {
  if (anchors_.size() < 2) {
    throw ProfileError("profile '" + name_ + "' needs at least two anchors");
  }
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    const auto& a = anchors_[i];
    if (!std::isfinite(a.packet_len) || !std::isfinite(a.delay) || a.delay < 0) {
      throw ProfileError("profile '" + name_ + "' has an invalid anchor");
    }
    if (i > 0 && !(a.packet_len > anchors_[i - 1].packet_len)) {
      throw ProfileError("profile '" + name_ + "' anchors must be strictly increasing in length");
    }
  }
}

Micros ProcessingProfile::at(double packet_len) const {
  if (packet_len <= anchors_.front().packet_len) return anchors_.front().delay;
  if (packet_len >= anchors_.back().packet_len) return anchors_.back().delay;
  auto hi = std::upper_bound(
      anchors_.begin(), anchors_.end(), packet_len,
      [](double len, const ProfileAnchor& a) { return len < a.packet_len; });
  auto lo = hi - 1;
  if (packet_len == lo->packet_len) return lo->delay;
  const double t = (packet_len - lo->packet_len) / (hi->packet_len - lo->packet_len);
  return lo->delay + t * (hi->delay - lo->delay);
}

ProcessingProfile ProcessingProfile::plus(const ProcessingProfile& delta, std::string name) const {
  std::set<double> lengths;
  for (const auto& a : anchors_) lengths.insert(a.packet_len);
  for (const auto& a : delta.anchors_) lengths.insert(a.packet_len);
  std::vector<ProfileAnchor> sum;
  sum.reserve(lengths.size());
  for (double len : lengths) sum.push_back({len, at(len) + delta.at(len)});
  return ProcessingProfile(std::move(name), std::move(sum));
}

ProcessingProfile ProcessingProfile::constant(std::string name, Micros delay) {
  return ProcessingProfile(std::move(name), {{0.0, delay}, {1.0, delay}});
}

Micros transmission_delay(Bytes frame_len, const LinkSpec& link) {
  link.validate();
  if (frame_len == 0) throw InvalidFrame(0, 1);
  return 8.0 * static_cast<double>(frame_len) / link.rate_bps * kMicrosPerSecond;
}

Micros propagation_delay(const LinkSpec& link) {
  link.validate();
  return link.length_m / link.prop_speed_mps * kMicrosPerSecond;
}

Micros queuing_delay(const QueueModel& q) {
  if (!(q.service_rate > q.arrival_rate)) {
    throw UnstableQueue("arrival rate must be below the service rate");
  }
  return (1.0 / (q.service_rate - q.arrival_rate) - 1.0 / q.service_rate) * kMicrosPerSecond;
}

Micros queuing_delta(const QueueModel& q) {
  if (!(q.service_rate > q.arrival_rate + q.overhead_rate)) {
    throw UnstableQueue("arrival plus overhead rate must be below the service rate");
  }
  return (1.0 / (q.service_rate - (q.arrival_rate + q.overhead_rate)) -
          1.0 / (q.service_rate - q.arrival_rate)) *
         kMicrosPerSecond;
}

QueueModel rates_from_bits(double link_rate_bps, double offered_load_bps, Bytes mean_frame,
                           Bytes overhead) {
  if (mean_frame == 0) throw InvalidFrame(0, 1);
  const double bits = 8.0 * static_cast<double>(mean_frame);
  QueueModel q;
  q.service_rate = link_rate_bps / bits;
  q.arrival_rate = offered_load_bps / bits;
  q.overhead_rate =
      q.arrival_rate * static_cast<double>(overhead) / static_cast<double>(mean_frame);
  return q;
}

double max_load_for_queuing_delta(double link_rate_bps, Bytes mean_frame, Bytes overhead,
                                  Micros max_delta) {
  if (mean_frame == 0) throw InvalidFrame(0, 1);
  const double growth = 1.0 + static_cast<double>(overhead) / static_cast<double>(mean_frame);
  // Loads at or above link/growth make the secured queue unstable.
  double lo = 0.0;
  double hi = link_rate_bps / growth;
  for (int i = 0; i < 200 && hi - lo > 1e-6; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double d = queuing_delta(rates_from_bits(link_rate_bps, mid, mean_frame, overhead));
    (d <= max_delta ? lo : hi) = mid;
  }
  return lo;
}

Micros processing_delay(Bytes frame_len, const ProcessingProfile& profile) {
  return profile.at(static_cast<double>(frame_len));
}

DelayBreakdown total_delay(Micros queuing, Micros propagation, Micros transmission,
                           Micros processing) {
  require_finite(queuing, "queuing");
  require_finite(propagation, "propagation");
  require_finite(transmission, "transmission");
  require_finite(processing, "processing");
  return {queuing, propagation, transmission, processing,
          queuing + propagation + transmission + processing};
}

Micros processing_from_total(Micros total, Micros queuing, Micros propagation,
                             Micros transmission) {
  return total - queuing - propagation - transmission;
}

DelayBreakdown one_way_delay(Bytes frame_len, const LinkSpec& link,
                             const ProcessingProfile& profile, Micros queuing) {
  return total_delay(queuing, propagation_delay(link), transmission_delay(frame_len, link),
                     processing_delay(frame_len, profile));
}

Micros rtt_estimate(Bytes frame_len, const LinkSpec& link, const ProcessingProfile& profile) {
  return 2.0 * (processing_delay(frame_len, profile) + transmission_delay(frame_len, link) +
                propagation_delay(link));
}

ProcessingProfile e2_pt_profile(Micros sack_delay, Micros slope_delta) {
  return ProcessingProfile("e2-pt", {{62, sack_delay}, {1500, sack_delay + slope_delta}});
}

ProcessingProfile e2_aes256cbc_profile() {
  return e2_pt_profile().plus(ProcessingProfile("cbc-delta", {{62, 22}, {1500, 50}}),
                              "e2-aes256cbc");
}

ProcessingProfile e2_aes256gcm_profile() {
  auto pt = e2_pt_profile();
  return ProcessingProfile("e2-aes256gcm", {pt.anchors().begin(), pt.anchors().end()});
}

ProcessingProfile fh_pt_profile(Micros small, Micros large) {
  return ProcessingProfile("fh-pt", {{62, small}, {9000, large}});
}

ProcessingProfile fh_macsec_delta(bool encrypt) {
  const Micros large = encrypt ? 218.0 : 153.0;
  return ProcessingProfile(encrypt ? "fh-macsec-enc-delta" : "fh-macsec-delta",
                           {{62, 39}, {1500, 39}, {9000, large}});
}

ProcessingProfile fh_macsec_profile(bool encrypt, const ProcessingProfile& baseline) {
  return baseline.plus(fh_macsec_delta(encrypt), encrypt ? "fh-macsec-enc" : "fh-macsec");
}

std::vector<std::string> builtin_profile_names() {
  return {"e2-pt", "e2-aes256cbc", "e2-aes256gcm", "fh-pt", "fh-macsec", "fh-macsec-enc"};
}

ProcessingProfile builtin_profile(const std::string& name) {
  if (name == "e2-pt") return e2_pt_profile();
  if (name == "e2-aes256cbc") return e2_aes256cbc_profile();
  if (name == "e2-aes256gcm") return e2_aes256gcm_profile();
  if (name == "fh-pt") return fh_pt_profile();
  if (name == "fh-macsec") return fh_macsec_profile(false);
  if (name == "fh-macsec-enc") return fh_macsec_profile(true);
  throw ProfileError("unknown profile '" + name + "'");
}

}  // namespace seccost
