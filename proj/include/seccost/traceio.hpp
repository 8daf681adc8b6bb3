#pragma once

// Packet traces: classic pcap I/O, E2 / Open Fronthaul classification,
// size distributions and secured-traffic projection.

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seccost/delaymodel.hpp"
#include "seccost/overhead.hpp"

namespace seccost {

enum class PacketClass {
  E2Sack,
  E2apShort,
  E2apLong,
  EcpriUserPlane,
  EcpriControlPlane,
  Other,
};

inline constexpr std::size_t kPacketClassCount = 6;
inline constexpr std::array<PacketClass, kPacketClassCount> kAllPacketClasses{
    PacketClass::E2Sack,         PacketClass::E2apShort,         PacketClass::E2apLong,
    PacketClass::EcpriUserPlane, PacketClass::EcpriControlPlane, PacketClass::Other};

std::string_view packet_class_name(PacketClass c);
std::optional<PacketClass> parse_packet_class(std::string_view text);

enum class Direction { AtoB, BtoA, Unknown };

struct PacketRecord {
  std::int64_t timestamp_ns = 0;
  Bytes captured_len = 0;
  Bytes original_len = 0;
  PacketClass classification = PacketClass::Other;
  Direction direction = Direction::Unknown;
  std::vector<std::uint8_t> data;  // captured bytes, empty for CSV ingest

  double timestamp() const { return static_cast<double>(timestamp_ns) * 1e-9; }
};

enum class LinkType : std::uint32_t { Ethernet = 1 };

struct Trace {
  std::vector<PacketRecord> records;
  LinkType link_type = LinkType::Ethernet;
  std::string source;

  bool empty() const { return records.empty(); }
  /// Last minus first timestamp in seconds, 0 for fewer than two records.
  double duration() const;
};

// --- pcap ---------------------------------------------------------------

enum class PcapResolution { Micro, Nano };
enum class ByteOrder { Little, Big };

struct PcapWriteOptions {
  PcapResolution resolution = PcapResolution::Micro;
  ByteOrder byte_order = ByteOrder::Little;
  std::uint32_t snaplen = 65535;
};

/// Parses a classic pcap image (either magic, either byte order, Ethernet
/// link type only). Throws UnsupportedFormat or TruncatedCapture.
/// Directions are assigned from the MAC pair of the first frame.
Trace parse_pcap(std::span<const std::uint8_t> bytes, std::string source = {});
Trace read_pcap_file(const std::string& path);

/// Writes records as a classic pcap image. Frames longer than the snaplen are
/// truncated; original_len is preserved.
std::vector<std::uint8_t> write_pcap(const Trace& trace, const PcapWriteOptions& options = {});

/// CSV ingest: `ts_s,len_bytes,class` with an optional header row.
Trace parse_trace_csv(std::istream& in, std::string source = {});

// --- classification ----------------------------------------------------

inline constexpr Bytes kDefaultE2apThreshold = 300;
inline constexpr std::uint16_t kEthertypeIpv4 = 0x0800;
inline constexpr std::uint16_t kEthertypeEcpri = 0xAEFE;
inline constexpr std::uint8_t kIpProtoSctp = 132;

/// SCTP over IPv4 by first chunk type: SACK (3) or DATA (0), the latter split
/// into short/long E2AP at `threshold` bytes of frame length. Anything else is
/// Other.
Trace classify_e2(Trace trace, Bytes threshold = kDefaultE2apThreshold);

struct FronthaulClassification {
  Trace trace;
  std::size_t malformed = 0;  // eCPRI frames with an unusable common header
};

/// eCPRI over Ethernet: message type 0 is user plane, type 2 control plane.
FronthaulClassification classify_fronthaul(Trace trace);

// --- analysis ----------------------------------------------------------

using RecordFilter = std::function<bool(const PacketRecord&)>;

RecordFilter any_record();
RecordFilter of_classes(std::vector<PacketClass> classes);

struct CdfPoint {
  Bytes length;
  double cumulative_fraction;
};

using SizeCdf = std::vector<CdfPoint>;

/// Empirical CDF of original_len. Throws EmptySelection.
SizeCdf empirical_cdf(const Trace& trace, const RecordFilter& filter = any_record());

struct ClassStats {
  std::size_t count = 0;
  Bytes total_bytes = 0;
  double mean_len = 0;
};

struct TraceSummary {
  std::size_t count = 0;
  std::array<ClassStats, kPacketClassCount> per_class{};
  double mean_len = 0;
  Bytes min_len = 0;
  Bytes max_len = 0;
  Bytes p50_len = 0;
  Bytes p90_len = 0;
  Bytes p99_len = 0;
  double duration_s = 0;
  /// 8 * sum(len) / duration; absent when the duration is zero.
  std::optional<double> offered_load_bps;

  const ClassStats& of(PacketClass c) const { return per_class[static_cast<std::size_t>(c)]; }
};

/// Throws EmptySelection for an empty trace.
TraceSummary summarize(const Trace& trace);

struct ClassProjection {
  std::size_t count = 0;
  Bytes pt_bytes = 0;
  Bytes ct_bytes = 0;
  double pt_mean_len = 0;
  double ct_mean_len = 0;
  Micros pt_proc_mean = 0;
  Micros ct_proc_mean = 0;
  Micros added_proc_mean = 0;
};

struct ProjectionReport {
  std::string protocol;
  std::string cipher;
  std::array<ClassProjection, kPacketClassCount> per_class{};
  ClassProjection total;
  double duration_s = 0;
  std::optional<double> pt_load_bps;
  std::optional<double> ct_load_bps;

  const ClassProjection& of(PacketClass c) const {
    return per_class[static_cast<std::size_t>(c)];
  }
};

/// What-if of securing every packet of a classified trace with `cfg`.
/// Processing delay is looked up at each packet's plaintext length in
/// `baseline` (before) and `secured` (after). Protocol None is the identity:
/// sizes unchanged and `baseline` used for both.
ProjectionReport project_secured(const Trace& trace, const SecurityConfig& cfg,
                                 const ProcessingProfile& secured,
                                 const ProcessingProfile& baseline);

}  // namespace seccost
