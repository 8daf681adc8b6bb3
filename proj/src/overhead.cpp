#include "seccost/overhead.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <utility>

#include "seccost/error.hpp"

namespace seccost {
namespace {

constexpr std::array<std::pair<Cipher, std::string_view>, 7> kCipherNames{{
    {Cipher::Aes128Cbc, "aes128-cbc"},
    {Cipher::Aes256Cbc, "aes256-cbc"},
    {Cipher::Aes128Gcm, "aes128-gcm"},
    {Cipher::Aes256Gcm, "aes256-gcm"},
    {Cipher::Aes128Ccm, "aes128-ccm"},
    {Cipher::Aes256Ccm, "aes256-ccm"},
    {Cipher::ChaCha20Poly1305, "chacha20-poly1305"},
}};

constexpr std::array<std::pair<Protocol, std::string_view>, 6> kProtocolNames{{
    {Protocol::None, "none"},
    {Protocol::EspTunnel, "esp-tunnel"},
    {Protocol::EspTransport, "esp-transport"},
    {Protocol::Macsec, "macsec"},
    {Protocol::Tls, "tls"},
    {Protocol::SshV2, "sshv2"},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Bytes round_up(Bytes n, Bytes align) { return (n + align - 1) / align * align; }

// Shared ESP layout once the protected portion is known. `clear` is what stays
// outside the ESP payload (Ethernet + outer/original IP header).
OverheadBreakdown esp_layout(Bytes pt_frame_len, Bytes protected_len, Bytes outer_ip,
                             const CipherSuite& suite, const SecurityConfig& cfg) {
  OverheadBreakdown b;
  b.pt_frame_len = pt_frame_len;
  b.eth_header = cfg.eth_header_len;
  b.outer_ip = outer_ip;
  b.esp_header = cfg.esp_header_len;
  b.encrypted_payload = round_up(protected_len + kEspTrailerLen, suite.block_align);
  b.padding = b.encrypted_payload - protected_len - kEspTrailerLen;
  b.trailer = kEspTrailerLen;
  b.iv = suite.iv_len;
  b.icv = suite.icv_len;
  b.outer_headers = outer_ip + cfg.esp_header_len;
  b.overhead_total = b.outer_headers + b.iv + b.padding + b.trailer + b.icv;
  b.ct_frame_len = pt_frame_len + b.overhead_total;
  return b;
}

}  // namespace

std::string_view cipher_name(Cipher c) {
  for (const auto& [k, v] : kCipherNames) {
    if (k == c) return v;
  }
  return "unknown";
}

std::optional<Cipher> parse_cipher(std::string_view text) {
  auto key = lower(text);
  // The CBC suites are commonly written with their integrity transform.
  if (auto plus = key.find('+'); plus != std::string::npos) key.resize(plus);
  for (const auto& [k, v] : kCipherNames) {
    if (v == key) return k;
  }
  return std::nullopt;
}

std::string_view protocol_name(Protocol p) {
  for (const auto& [k, v] : kProtocolNames) {
    if (k == p) return v;
  }
  return "unknown";
}

std::optional<Protocol> parse_protocol(std::string_view text) {
  auto key = lower(text);
  for (const auto& [k, v] : kProtocolNames) {
    if (v == key) return k;
  }
  if (key == "esp" || key == "ipsec") return Protocol::EspTunnel;
  if (key == "ssh") return Protocol::SshV2;
  return std::nullopt;
}

std::string_view CipherSuite::name() const { return cipher_name(cipher); }

std::string_view CipherSuite::integrity() const { return aead ? "" : "hmac-sha2-256-128"; }

CipherSuite cipher_suite(Cipher c) {
  switch (c) {
    case Cipher::Aes128Cbc:
    case Cipher::Aes256Cbc:
      return {c, 16, 16, 16, false};
    case Cipher::Aes128Gcm:
    case Cipher::Aes256Gcm:
    case Cipher::Aes128Ccm:
    case Cipher::Aes256Ccm:
    case Cipher::ChaCha20Poly1305:
      return {c, 4, 8, 16, true};
  }
  throw UnknownCipher("unknown cipher");
}

void SecurityConfig::validate() const {
  if (esp_header_len != kEspHeaderLen) throw InvalidConfig("ESP header length is fixed at 8 B");
  if (eth_header_len != kEthHeaderLen) throw InvalidConfig("Ethernet header length is fixed at 14 B");
  if (tls_record_overhead < kTlsMinRecordOverhead) {
    throw InvalidConfig("TLS record overhead must be at least 25 B");
  }
}

bool OverheadBreakdown::consistent() const {
  return overhead_total == outer_headers + iv + padding + trailer + icv &&
         ct_frame_len == pt_frame_len + overhead_total;
}

OverheadBreakdown esp_tunnel_frame_length(Bytes pt_frame_len, const CipherSuite& suite,
                                          const SecurityConfig& cfg) {
  cfg.validate();
  const Bytes minimum = cfg.eth_header_len + cfg.outer_ip_len;
  if (pt_frame_len < minimum) throw InvalidFrame(pt_frame_len, minimum);
  // The whole inner IP packet is protected.
  return esp_layout(pt_frame_len, pt_frame_len - cfg.eth_header_len, cfg.outer_ip_len, suite,
                    cfg);
}

OverheadBreakdown esp_transport_frame_length(Bytes pt_frame_len, const CipherSuite& suite,
                                             const SecurityConfig& cfg) {
  cfg.validate();
  const Bytes clear = cfg.eth_header_len + cfg.outer_ip_len;
  if (pt_frame_len < clear) throw InvalidFrame(pt_frame_len, clear);
  // Original IP header stays in the clear; only its payload is protected.
  return esp_layout(pt_frame_len, pt_frame_len - clear, 0, suite, cfg);
}

OverheadBreakdown macsec_frame_length(Bytes pt_frame_len, bool /*macsec_encrypt*/) {
  if (pt_frame_len < kEthHeaderLen) throw InvalidFrame(pt_frame_len, kEthHeaderLen);
  // GCM-AES is a counter-mode construction, so both modes add exactly
  // SecTAG + ICV and never pad.
  OverheadBreakdown b;
  b.pt_frame_len = pt_frame_len;
  b.eth_header = kEthHeaderLen;
  b.outer_headers = kMacsecSecTagLen;
  b.icv = kMacsecIcvLen;
  b.encrypted_payload = pt_frame_len - kEthHeaderLen;
  b.overhead_total = b.outer_headers + b.icv;
  b.ct_frame_len = pt_frame_len + b.overhead_total;
  return b;
}

OverheadBreakdown tls_record_length(Bytes pt_payload_len, const SecurityConfig& cfg) {
  cfg.validate();
  OverheadBreakdown b;
  b.pt_frame_len = pt_payload_len;
  b.outer_headers = cfg.tls_record_overhead;
  b.encrypted_payload = pt_payload_len;
  b.overhead_total = b.outer_headers;
  b.ct_frame_len = pt_payload_len + b.overhead_total;
  return b;
}

Bytes min_overhead(Protocol protocol) {
  switch (protocol) {
    case Protocol::EspTunnel:
    case Protocol::EspTransport:
      return 57;
    case Protocol::Tls:
      return kTlsMinRecordOverhead;
    case Protocol::SshV2:
      return kSshMinOverhead;
    case Protocol::Macsec:
      return kMacsecOverhead;
    case Protocol::None:
      break;
  }
  throw InvalidConfig("protocol 'none' has no overhead floor");
}

OverheadBreakdown secure_frame(Bytes pt_frame_len, const SecurityConfig& cfg) {
  switch (cfg.protocol) {
    case Protocol::None: {
      OverheadBreakdown b;
      b.pt_frame_len = pt_frame_len;
      b.ct_frame_len = pt_frame_len;
      b.encrypted_payload = 0;
      return b;
    }
    case Protocol::EspTunnel:
      return esp_tunnel_frame_length(pt_frame_len, cipher_suite(cfg.cipher), cfg);
    case Protocol::EspTransport:
      return esp_transport_frame_length(pt_frame_len, cipher_suite(cfg.cipher), cfg);
    case Protocol::Macsec:
      return macsec_frame_length(pt_frame_len, cfg.macsec_encrypt);
    case Protocol::Tls:
      return tls_record_length(pt_frame_len, cfg);
    case Protocol::SshV2: {
      OverheadBreakdown b;
      b.pt_frame_len = pt_frame_len;
      b.outer_headers = kSshMinOverhead;
      b.overhead_total = kSshMinOverhead;
      b.ct_frame_len = pt_frame_len + kSshMinOverhead;
      return b;
    }
  }
  throw InvalidConfig("unknown protocol");
}

}  // namespace seccost
