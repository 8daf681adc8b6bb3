#pragma once

// Byte-exact sizing of frames secured with IPsec ESP, MACsec and TLS.
//
// All lengths are on-wire Ethernet frame lengths including the 14 B Ethernet
// header and excluding the FCS. TLS is the exception: it is sized on the
// transport payload since it does not touch the lower headers.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace seccost {

using Bytes = std::size_t;

inline constexpr Bytes kEthHeaderLen = 14;
inline constexpr Bytes kIpv4HeaderLen = 20;
inline constexpr Bytes kEspHeaderLen = 8;    // SPI + sequence number
inline constexpr Bytes kEspTrailerLen = 2;   // pad length + next header
inline constexpr Bytes kMacsecSecTagLen = 16;
inline constexpr Bytes kMacsecIcvLen = 16;
inline constexpr Bytes kMacsecOverhead = kMacsecSecTagLen + kMacsecIcvLen;
inline constexpr Bytes kTlsMinRecordOverhead = 25;
inline constexpr Bytes kSshMinOverhead = 28;

enum class Cipher {
  Aes128Cbc,
  Aes256Cbc,
  Aes128Gcm,
  Aes256Gcm,
  Aes128Ccm,
  Aes256Ccm,
  ChaCha20Poly1305,
};

/// Framing parameters of an ESP/TLS cipher. CBC suites carry a separate
/// HMAC-SHA2-256-128 integrity transform; AEAD suites carry their own tag.
struct CipherSuite {
  Cipher cipher;
  Bytes block_align;
  Bytes iv_len;
  Bytes icv_len;
  bool aead;

  std::string_view name() const;
  /// Name of the separate integrity transform, empty for AEAD suites.
  std::string_view integrity() const;
};

CipherSuite cipher_suite(Cipher c);
std::string_view cipher_name(Cipher c);
/// Accepts the CLI spelling, e.g. "aes256-cbc", "aes256-gcm", "chacha20-poly1305".
std::optional<Cipher> parse_cipher(std::string_view text);

enum class Protocol { None, EspTunnel, EspTransport, Macsec, Tls, SshV2 };

std::string_view protocol_name(Protocol p);
std::optional<Protocol> parse_protocol(std::string_view text);

struct SecurityConfig {
  Protocol protocol = Protocol::None;
  Cipher cipher = Cipher::Aes256Cbc;
  bool macsec_encrypt = true;
  Bytes outer_ip_len = kIpv4HeaderLen;
  Bytes esp_header_len = kEspHeaderLen;
  Bytes eth_header_len = kEthHeaderLen;
  Bytes tls_record_overhead = kTlsMinRecordOverhead;

  /// Throws InvalidConfig when a fixed field was changed or the TLS overhead
  /// is below the protocol floor.
  void validate() const;
};

/// Per-layer byte accounting of one secured frame.
///
/// overhead_total = outer_headers + iv + padding + trailer + icv and
/// ct_frame_len = pt_frame_len + overhead_total always hold. For ESP the
/// outer_headers term is the outer IPv4 header (tunnel mode) plus the ESP
/// header; for MACsec it is the SecTAG.
struct OverheadBreakdown {
  Bytes pt_frame_len = 0;
  Bytes outer_headers = 0;
  Bytes iv = 0;
  Bytes padding = 0;
  Bytes trailer = 0;
  Bytes icv = 0;
  Bytes ct_frame_len = 0;
  Bytes overhead_total = 0;

  // Layout detail, informational only.
  Bytes eth_header = 0;
  Bytes outer_ip = 0;
  Bytes esp_header = 0;
  Bytes encrypted_payload = 0;

  bool consistent() const;
};

OverheadBreakdown esp_tunnel_frame_length(Bytes pt_frame_len, const CipherSuite& suite,
                                          const SecurityConfig& cfg = {});
OverheadBreakdown esp_transport_frame_length(Bytes pt_frame_len, const CipherSuite& suite,
                                             const SecurityConfig& cfg = {});
OverheadBreakdown macsec_frame_length(Bytes pt_frame_len, bool macsec_encrypt);
OverheadBreakdown tls_record_length(Bytes pt_payload_len, const SecurityConfig& cfg = {});

/// Table floor of per-packet overhead. Throws InvalidConfig for Protocol::None.
Bytes min_overhead(Protocol protocol);

/// Dispatches on cfg.protocol. Protocol::None yields a zero-overhead breakdown.
OverheadBreakdown secure_frame(Bytes pt_frame_len, const SecurityConfig& cfg);

}  // namespace seccost
