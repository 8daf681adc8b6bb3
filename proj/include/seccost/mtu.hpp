#pragma once

// Fragmentation of fixed-size payloads under an MTU and the resulting
// delay/throughput, plus MTU sweeps.
//
// The MTU bounds the frame payload above the Ethernet header. Security
// overhead is added outside the MTU budget (MACsec expands the frame in the
// NIC) unless strict mode asks for it to be reserved inside the MTU.

#include <optional>
#include <vector>

#include "seccost/delaymodel.hpp"
#include "seccost/overhead.hpp"
#include "seccost/perfmodel.hpp"

namespace seccost {

/// Largest eCPRI payload and the common-header size carried by each fragment.
inline constexpr Bytes kMaxEcpriPayload = 8192;
inline constexpr Bytes kEcpriHeaderLen = 8;

enum class FragmentStrategy { Greedy, EvenSplit };

struct FragmentationPlan {
  Bytes payload = 0;
  Bytes mtu = 0;
  Bytes per_fragment_header = 0;
  FragmentStrategy strategy = FragmentStrategy::Greedy;
  std::vector<Bytes> fragments;

  Bytes usable() const;
};

/// Throws MtuTooSmall when mtu <= per_fragment_header + reserve, and Error
/// for an empty payload. `reserve` is extra space kept free in every frame
/// (used by strict mode for the security overhead).
FragmentationPlan fragment_payload(Bytes payload, Bytes mtu, Bytes per_fragment_header,
                                   FragmentStrategy strategy, Bytes reserve = 0);

struct MtuModelOptions {
  Bytes per_fragment_header = kEcpriHeaderLen;
  FragmentStrategy strategy = FragmentStrategy::Greedy;
  /// Subtract the security overhead of a full-size frame from the usable size.
  bool strict = false;
  /// Overlap the processing of consecutive fragments: the sum of per-fragment
  /// processing is replaced by the largest one. Off by default.
  bool pipelined = false;
};

struct FragmentDelay {
  Bytes pt_frame_len = 0;
  Bytes ct_frame_len = 0;
  DelayBreakdown delay;
};

struct MtuTransferResult {
  FragmentationPlan plan;
  std::vector<FragmentDelay> frames;
  Micros total_delay = 0;
  Mbps throughput = 0;
};

/// Delay of pushing one payload through the link as back-to-back fragments.
/// Each fragment becomes an Ethernet frame (fragment + header + 14 B),
/// is secured per `cfg`, and costs propagation + transmission of the secured
/// frame + processing. Processing is looked up at the plaintext frame length,
/// the size the profiles were measured at.
MtuTransferResult mtu_transfer_model(Bytes payload, Bytes mtu, const SecurityConfig& cfg,
                                     const ProcessingProfile& profile, const LinkSpec& link,
                                     const MtuModelOptions& options = {});

struct MtuSweepRow {
  Bytes mtu = 0;
  std::size_t fragments = 0;
  Micros total_delay = 0;
  Mbps throughput = 0;
};

/// Evaluates every MTU in [lo, hi] stepping by `step`. Points whose MTU cannot
/// carry a fragment are skipped.
std::vector<MtuSweepRow> mtu_sweep(Bytes payload, const SecurityConfig& cfg,
                                   const ProcessingProfile& profile, const LinkSpec& link,
                                   Bytes lo, Bytes hi, Bytes step,
                                   const MtuModelOptions& options = {});

struct OptimalMtu {
  Bytes mtu = 0;
  Micros delay = 0;
};

/// Minimum-delay MTU of the sweep; ties go to the larger MTU.
OptimalMtu optimal_mtu(Bytes payload, const SecurityConfig& cfg, const ProcessingProfile& profile,
                       const LinkSpec& link, Bytes lo, Bytes hi, Bytes step = 100,
                       const MtuModelOptions& options = {});

/// Bulk transfer of a large file over a saturated secured stream.
///
/// Every frame carries mtu - l3l4_header bytes of file data. The transfer
/// takes the longer of the link serialization time of all secured frames and
/// the time the security pipeline needs. The pipeline's per-frame work is the
/// processing delay the security adds to that frame (secured minus baseline
/// profile), and `pipeline_rate` is the goodput the pipeline sustains with
/// frames of `reference_mtu`. With no added work the pipeline is a plain
/// byte-rate ceiling.
struct FileTransferParams {
  Bytes file_size = 0;
  Bytes mtu = 1500;
  SecurityConfig cfg;
  ProcessingProfile secured = fh_macsec_profile(true);
  ProcessingProfile baseline = fh_pt_profile();
  LinkSpec link;
  Mbps pipeline_rate = 2500;
  Bytes reference_mtu = 9000;
  Bytes l3l4_header = 40;  // IPv4 + TCP
};

struct FileTransferResult {
  std::size_t frames = 0;
  Bytes wire_bytes = 0;
  double goodput_fraction = 0;  // file bytes / on-wire bytes
  double link_time_s = 0;
  double pipeline_time_s = 0;
  double duration_s = 0;
  Mbps throughput = 0;  // file goodput
};

FileTransferResult file_transfer_model(const FileTransferParams& params);

}  // namespace seccost
