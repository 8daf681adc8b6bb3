#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>

#include "seccost/error.hpp"
#include "seccost/traceio.hpp"

namespace seccost {
namespace {

constexpr std::uint32_t kMagicMicro = 0xa1b2c3d4;
constexpr std::uint32_t kMagicNano = 0xa1b23c4d;
constexpr std::size_t kGlobalHeaderLen = 24;
constexpr std::size_t kRecordHeaderLen = 16;

std::uint32_t bswap32(std::uint32_t v) {
  return ((v & 0xff) << 24) | ((v & 0xff00) << 8) | ((v >> 8) & 0xff00) | (v >> 24);
}

class Cursor {
 public:
  Cursor(std::span<const std::uint8_t> bytes, bool swap) : bytes_(bytes), swap_(swap) {}

  std::size_t remaining() const { return bytes_.size() - pos_; }

  std::uint32_t u32() {
    std::uint32_t v = static_cast<std::uint32_t>(bytes_[pos_]) |
                      static_cast<std::uint32_t>(bytes_[pos_ + 1]) << 8 |
                      static_cast<std::uint32_t>(bytes_[pos_ + 2]) << 16 |
                      static_cast<std::uint32_t>(bytes_[pos_ + 3]) << 24;
    pos_ += 4;
    return swap_ ? bswap32(v) : v;
  }

  std::span<const std::uint8_t> take(std::size_t n) {
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  void skip(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
  bool swap_;
};

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v, ByteOrder order) {
  if (order == ByteOrder::Little) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
  } else {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
  }
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v, ByteOrder order) {
  for (int i = 0; i < 4; ++i) {
    const int shift = order == ByteOrder::Little ? 8 * i : 8 * (3 - i);
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

bool same_mac(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

void assign_directions(Trace& trace) {
  if (trace.records.empty() || trace.records.front().data.size() < 12) return;
  const auto& first = trace.records.front().data;
  const std::span<const std::uint8_t> a(first.data() + 6, 6);  // first sender
  const std::span<const std::uint8_t> b(first.data(), 6);
  if (same_mac(a, b)) return;
  for (auto& rec : trace.records) {
    if (rec.data.size() < 12) continue;
    const std::span<const std::uint8_t> dst(rec.data.data(), 6);
    const std::span<const std::uint8_t> src(rec.data.data() + 6, 6);
    if (same_mac(src, a) && same_mac(dst, b)) {
      rec.direction = Direction::AtoB;
    } else if (same_mac(src, b) && same_mac(dst, a)) {
      rec.direction = Direction::BtoA;
    }
  }
}

}  // namespace

double Trace::duration() const {
  if (records.size() < 2) return 0.0;
  return static_cast<double>(records.back().timestamp_ns - records.front().timestamp_ns) * 1e-9;
}

Trace parse_pcap(std::span<const std::uint8_t> bytes, std::string source) {
  if (bytes.size() < 4) throw UnsupportedFormat("input too short for a pcap magic number");
  // Read as little-endian regardless of host.
  const std::uint32_t magic = Cursor(bytes.first(4), false).u32();

  bool swap = false;
  PcapResolution res = PcapResolution::Micro;
  if (magic == kMagicMicro) {
  } else if (magic == bswap32(kMagicMicro)) {
    swap = true;
  } else if (magic == kMagicNano) {
    res = PcapResolution::Nano;
  } else if (magic == bswap32(kMagicNano)) {
    swap = true;
    res = PcapResolution::Nano;
  } else {
    std::ostringstream msg;
    msg << "unsupported capture magic 0x" << std::hex << magic << " (only classic pcap is read)";
    throw UnsupportedFormat(msg.str());
  }
  if (bytes.size() < kGlobalHeaderLen) throw UnsupportedFormat("truncated pcap global header");

  Cursor cur(bytes, swap);
  cur.skip(4 + 2 + 2 + 4 + 4);  // magic, version, thiszone, sigfigs
  cur.u32();                    // snaplen
  const std::uint32_t network = cur.u32();
  if (network != static_cast<std::uint32_t>(LinkType::Ethernet)) {
    throw UnsupportedFormat("unsupported link type " + std::to_string(network) +
                            " (only Ethernet is read)");
  }

  Trace trace;
  trace.source = std::move(source);
  const std::int64_t frac_scale = res == PcapResolution::Micro ? 1000 : 1;
  std::size_t index = 0;
  while (cur.remaining() > 0) {
    if (cur.remaining() < kRecordHeaderLen) {
      throw TruncatedCapture(index, "incomplete record header");
    }
    PacketRecord rec;
    const std::uint32_t sec = cur.u32();
    const std::uint32_t frac = cur.u32();
    rec.captured_len = cur.u32();
    rec.original_len = cur.u32();
    rec.timestamp_ns = static_cast<std::int64_t>(sec) * 1'000'000'000 +
                       static_cast<std::int64_t>(frac) * frac_scale;
    if (rec.captured_len > rec.original_len) {
      throw UnsupportedFormat("record " + std::to_string(index) +
                              " captured length exceeds its original length");
    }
    if (cur.remaining() < rec.captured_len) {
      throw TruncatedCapture(index, "payload shorter than its captured length");
    }
    auto payload = cur.take(rec.captured_len);
    rec.data.assign(payload.begin(), payload.end());
    trace.records.push_back(std::move(rec));
    ++index;
  }
  assign_directions(trace);
  return trace;
}

Trace read_pcap_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open capture file '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return parse_pcap(bytes, path);
}

std::vector<std::uint8_t> write_pcap(const Trace& trace, const PcapWriteOptions& options) {
  const auto order = options.byte_order;
  const bool nano = options.resolution == PcapResolution::Nano;
  std::vector<std::uint8_t> out;
  put_u32(out, nano ? kMagicNano : kMagicMicro, order);
  put_u16(out, 2, order);
  put_u16(out, 4, order);
  put_u32(out, 0, order);  // thiszone
  put_u32(out, 0, order);  // sigfigs
  put_u32(out, options.snaplen, order);
  put_u32(out, static_cast<std::uint32_t>(trace.link_type), order);
  for (const auto& rec : trace.records) {
    const auto sec = static_cast<std::uint32_t>(rec.timestamp_ns / 1'000'000'000);
    const auto rem = rec.timestamp_ns % 1'000'000'000;
    const auto frac = static_cast<std::uint32_t>(nano ? rem : rem / 1000);
    const std::size_t incl = std::min<std::size_t>(rec.data.size(), options.snaplen);
    put_u32(out, sec, order);
    put_u32(out, frac, order);
    put_u32(out, static_cast<std::uint32_t>(incl), order);
    put_u32(out, static_cast<std::uint32_t>(std::max(rec.original_len, incl)), order);
    out.insert(out.end(), rec.data.begin(), rec.data.begin() + static_cast<std::ptrdiff_t>(incl));
  }
  return out;
}

Trace parse_trace_csv(std::istream& in, std::string source) {
  Trace trace;
  trace.source = std::move(source);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("ts_s", 0) == 0) continue;  // header
    std::stringstream ss(line);
    std::string ts, len, cls;
    if (!std::getline(ss, ts, ',') || !std::getline(ss, len, ',')) {
      throw UnsupportedFormat("CSV line " + std::to_string(lineno) + ": expected ts_s,len_bytes,class");
    }
    std::getline(ss, cls);
    PacketRecord rec;
    try {
      rec.timestamp_ns = static_cast<std::int64_t>(std::llround(std::stod(ts) * 1e9));
      const long long l = std::stoll(len);
      if (l < 0) throw std::out_of_range("negative");
      rec.original_len = rec.captured_len = static_cast<Bytes>(l);
    } catch (const std::exception&) {
      throw UnsupportedFormat("CSV line " + std::to_string(lineno) + ": bad number");
    }
    cls.erase(0, cls.find_first_not_of(" \t"));
    cls.erase(cls.find_last_not_of(" \t") + 1);
    if (!cls.empty()) {
      auto c = parse_packet_class(cls);
      if (!c) throw UnsupportedFormat("CSV line " + std::to_string(lineno) + ": unknown class '" + cls + "'");
      rec.classification = *c;
    }
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace seccost
