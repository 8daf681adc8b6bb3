#include "seccost/traceio.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "seccost/error.hpp"

namespace seccost {
namespace {

constexpr std::array<std::string_view, kPacketClassCount> kClassNames{
    "e2-sack", "e2ap-short", "e2ap-long", "ecpri-up", "ecpri-cp", "other"};

constexpr std::uint8_t kSctpChunkData = 0;
constexpr std::uint8_t kSctpChunkSack = 3;
constexpr std::size_t kSctpCommonHeaderLen = 12;
constexpr std::uint8_t kEcpriRevision = 1;
constexpr std::uint8_t kEcpriIqData = 0;
constexpr std::uint8_t kEcpriRtControl = 2;

std::uint16_t be16(const std::vector<std::uint8_t>& d, std::size_t off) {
  return static_cast<std::uint16_t>(d[off] << 8 | d[off + 1]);
}

PacketClass classify_e2_frame(const PacketRecord& rec, Bytes threshold) {
  const auto& d = rec.data;
  if (d.size() < kEthHeaderLen + 20 || be16(d, 12) != kEthertypeIpv4) return PacketClass::Other;
  const std::size_t ip = kEthHeaderLen;
  if ((d[ip] >> 4) != 4) return PacketClass::Other;
  const std::size_t ihl = static_cast<std::size_t>(d[ip] & 0x0f) * 4;
  if (ihl < 20 || d[ip + 9] != kIpProtoSctp) return PacketClass::Other;
  const std::size_t chunk = ip + ihl + kSctpCommonHeaderLen;
  if (d.size() <= chunk) return PacketClass::Other;
  switch (d[chunk]) {
    case kSctpChunkSack:
      return PacketClass::E2Sack;
    case kSctpChunkData:
      return rec.original_len < threshold ? PacketClass::E2apShort : PacketClass::E2apLong;
    default:
      return PacketClass::Other;
  }
}

Bytes nearest_rank(const std::vector<Bytes>& sorted, double q) {
  const auto n = sorted.size();
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
  rank = std::clamp<std::size_t>(rank, 1, n);
  return sorted[rank - 1];
}

}  // namespace

std::string_view packet_class_name(PacketClass c) {
  return kClassNames[static_cast<std::size_t>(c)];
}

std::optional<PacketClass> parse_packet_class(std::string_view text) {
  for (std::size_t i = 0; i < kPacketClassCount; ++i) {
    if (kClassNames[i] == text) return kAllPacketClasses[i];
  }
  return std::nullopt;
}

Trace classify_e2(Trace trace, Bytes threshold) {
  for (auto& rec : trace.records) rec.classification = classify_e2_frame(rec, threshold);
  return trace;
}

FronthaulClassification classify_fronthaul(Trace trace) {
  FronthaulClassification out;
  for (auto& rec : trace.records) {
    rec.classification = PacketClass::Other;
    const auto& d = rec.data;
    if (d.size() < kEthHeaderLen || be16(d, 12) != kEthertypeEcpri) continue;
    if (d.size() < kEthHeaderLen + 4 || (d[kEthHeaderLen] >> 4) != kEcpriRevision) {
      ++out.malformed;
      continue;
    }
    switch (d[kEthHeaderLen + 1]) {
      case kEcpriIqData:
        rec.classification = PacketClass::EcpriUserPlane;
        break;
      case kEcpriRtControl:
        rec.classification = PacketClass::EcpriControlPlane;
        break;
      default:
        break;
    }
  }
  out.trace = std::move(trace);
  return out;
}

RecordFilter any_record() {
  return [](const PacketRecord&) { return true; };
}

RecordFilter of_classes(std::vector<PacketClass> classes) {
  return [classes = std::move(classes)](const PacketRecord& r) {
    return std::find(classes.begin(), classes.end(), r.classification) != classes.end();
  };
}

SizeCdf empirical_cdf(const Trace& trace, const RecordFilter& filter) {
  std::map<Bytes, std::size_t> counts;
  std::size_t n = 0;
  for (const auto& rec : trace.records) {
    if (!filter(rec)) continue;
    ++counts[rec.original_len];
    ++n;
  }
  if (n == 0) throw EmptySelection("no packets match the selection");
  SizeCdf cdf;
  cdf.reserve(counts.size());
  std::size_t running = 0;
  for (const auto& [len, c] : counts) {
    running += c;
    cdf.push_back({len, static_cast<double>(running) / static_cast<double>(n)});
  }
  cdf.back().cumulative_fraction = 1.0;
  return cdf;
}

TraceSummary summarize(const Trace& trace) {
  if (trace.empty()) throw EmptySelection("trace has no packets");
  TraceSummary s;
  std::vector<Bytes> lens;
  lens.reserve(trace.records.size());
  Bytes total = 0;
  for (const auto& rec : trace.records) {
    auto& cs = s.per_class[static_cast<std::size_t>(rec.classification)];
    ++cs.count;
    cs.total_bytes += rec.original_len;
    total += rec.original_len;
    lens.push_back(rec.original_len);
  }
  for (auto& cs : s.per_class) {
    if (cs.count > 0) cs.mean_len = static_cast<double>(cs.total_bytes) / static_cast<double>(cs.count);
  }
  std::sort(lens.begin(), lens.end());
  s.count = lens.size();
  s.mean_len = static_cast<double>(total) / static_cast<double>(s.count);
  s.min_len = lens.front();
  s.max_len = lens.back();
  s.p50_len = nearest_rank(lens, 0.50);
  s.p90_len = nearest_rank(lens, 0.90);
  s.p99_len = nearest_rank(lens, 0.99);
  s.duration_s = trace.duration();
  if (s.duration_s > 0) s.offered_load_bps = 8.0 * static_cast<double>(total) / s.duration_s;
  return s;
}

ProjectionReport project_secured(const Trace& trace, const SecurityConfig& cfg,
                                 const ProcessingProfile& secured,
                                 const ProcessingProfile& baseline) {
  if (trace.empty()) throw EmptySelection("trace has no packets");
  const bool identity = cfg.protocol == Protocol::None;
  const ProcessingProfile& after = identity ? baseline : secured;

  ProjectionReport r;
  r.protocol = std::string(protocol_name(cfg.protocol));
  if (cfg.protocol == Protocol::EspTunnel || cfg.protocol == Protocol::EspTransport ||
      cfg.protocol == Protocol::Tls) {
    r.cipher = std::string(cipher_name(cfg.cipher));
  }

  // Accumulate sums; means are taken at the end.
  std::array<double, kPacketClassCount> pt_proc{};
  std::array<double, kPacketClassCount> ct_proc{};
  for (const auto& rec : trace.records) {
    const auto idx = static_cast<std::size_t>(rec.classification);
    auto& c = r.per_class[idx];
    const Bytes ct = secure_frame(rec.original_len, cfg).ct_frame_len;
    ++c.count;
    c.pt_bytes += rec.original_len;
    c.ct_bytes += ct;
    pt_proc[idx] += processing_delay(rec.original_len, baseline);
    ct_proc[idx] += processing_delay(rec.original_len, after);
  }

  double pt_proc_total = 0;
  double ct_proc_total = 0;
  for (std::size_t i = 0; i < kPacketClassCount; ++i) {
    auto& c = r.per_class[i];
    r.total.count += c.count;
    r.total.pt_bytes += c.pt_bytes;
    r.total.ct_bytes += c.ct_bytes;
    pt_proc_total += pt_proc[i];
    ct_proc_total += ct_proc[i];
    if (c.count == 0) continue;
    const double n = static_cast<double>(c.count);
    c.pt_mean_len = static_cast<double>(c.pt_bytes) / n;
    c.ct_mean_len = static_cast<double>(c.ct_bytes) / n;
    c.pt_proc_mean = pt_proc[i] / n;
    c.ct_proc_mean = ct_proc[i] / n;
    c.added_proc_mean = c.ct_proc_mean - c.pt_proc_mean;
  }
  const double n = static_cast<double>(r.total.count);
  r.total.pt_mean_len = static_cast<double>(r.total.pt_bytes) / n;
  r.total.ct_mean_len = static_cast<double>(r.total.ct_bytes) / n;
  r.total.pt_proc_mean = pt_proc_total / n;
  r.total.ct_proc_mean = ct_proc_total / n;
  r.total.added_proc_mean = r.total.ct_proc_mean - r.total.pt_proc_mean;

  r.duration_s = trace.duration();
  if (r.duration_s > 0) {
    r.pt_load_bps = 8.0 * static_cast<double>(r.total.pt_bytes) / r.duration_s;
    r.ct_load_bps = 8.0 * static_cast<double>(r.total.ct_bytes) / r.duration_s;
  }
  return r;
}

}  // namespace seccost
