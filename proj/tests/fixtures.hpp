#pragma once

// Hand-rolled byte builders for capture fixtures. Nothing here calls into the
// library, so the parser is checked against an independent encoding.

#include <cstdint>
#include <string>
#include <vector>

namespace fixtures {

using Buf = std::vector<std::uint8_t>;

inline void put16(Buf& b, std::uint16_t v, bool big) {
  if (big) {
    b.push_back(static_cast<std::uint8_t>(v >> 8));
    b.push_back(static_cast<std::uint8_t>(v));
  } else {
    b.push_back(static_cast<std::uint8_t>(v));
    b.push_back(static_cast<std::uint8_t>(v >> 8));
  }
}

inline void put32(Buf& b, std::uint32_t v, bool big) {
  for (int i = 0; i < 4; ++i) {
    const int shift = big ? 24 - 8 * i : 8 * i;
    b.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

inline Buf pcap_header(bool nano, bool big, std::uint32_t linktype = 1,
                       std::uint32_t snaplen = 65535) {
  Buf b;
  put32(b, nano ? 0xa1b23c4du : 0xa1b2c3d4u, big);
  put16(b, 2, big);
  put16(b, 4, big);
  put32(b, 0, big);  // thiszone
  put32(b, 0, big);  // sigfigs
  put32(b, snaplen, big);
  put32(b, linktype, big);
  return b;
}

inline void pcap_record(Buf& b, std::uint32_t sec, std::uint32_t frac, const Buf& frame,
                        bool big, std::uint32_t orig_len = 0) {
  put32(b, sec, big);
  put32(b, frac, big);
  put32(b, static_cast<std::uint32_t>(frame.size()), big);
  put32(b, orig_len ? orig_len : static_cast<std::uint32_t>(frame.size()), big);
  b.insert(b.end(), frame.begin(), frame.end());
}

inline Buf eth(std::uint8_t dst_last, std::uint8_t src_last, std::uint16_t ethertype) {
  Buf b{0x02, 0, 0, 0, 0, dst_last, 0x02, 0, 0, 0, 0, src_last};
  b.push_back(static_cast<std::uint8_t>(ethertype >> 8));
  b.push_back(static_cast<std::uint8_t>(ethertype));
  return b;
}

/// Ethernet + IPv4 + SCTP common header + one chunk of `chunk_type`, padded
/// with zeros to `frame_len`.
inline Buf sctp_frame(std::size_t frame_len, std::uint8_t chunk_type, bool a_to_b = true) {
  Buf b = a_to_b ? eth(0xbb, 0xaa, 0x0800) : eth(0xaa, 0xbb, 0x0800);
  const std::size_t ip_len = frame_len - 14;
  b.push_back(0x45);
  b.push_back(0);
  put16(b, static_cast<std::uint16_t>(ip_len), true);
  put32(b, 0, true);  // id, flags, fragment offset
  b.push_back(64);    // ttl
  b.push_back(132);   // SCTP
  put16(b, 0, true);
  put32(b, 0x0a000001, true);
  put32(b, 0x0a000002, true);
  put16(b, 36421, true);  // E2 SCTP port
  put16(b, 36421, true);
  put32(b, 1, true);  // verification tag
  put32(b, 0, true);  // checksum
  b.push_back(chunk_type);
  b.push_back(0);
  put16(b, static_cast<std::uint16_t>(frame_len - b.size() + 2), true);
  b.resize(frame_len, 0);
  return b;
}

/// Ethernet + eCPRI common header (revision 1) of `msg_type`, zero payload up
/// to `frame_len`.
inline Buf ecpri_frame(std::size_t frame_len, std::uint8_t msg_type, std::uint8_t revision = 1) {
  Buf b = eth(0xcc, 0xdd, 0xAEFE);
  b.push_back(static_cast<std::uint8_t>(revision << 4));
  b.push_back(msg_type);
  put16(b, static_cast<std::uint16_t>(frame_len - 18), true);
  b.resize(frame_len, 0);
  return b;
}

}  // namespace fixtures
