// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any of them fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "seccost/delaymodel.hpp"
#include "seccost/error.hpp"
#include "seccost/feasibility.hpp"
#include "seccost/mtu.hpp"
#include "seccost/overhead.hpp"
#include "seccost/perfmodel.hpp"
#include "seccost/traceio.hpp"

using namespace seccost;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

SecurityConfig with(Protocol p, Cipher c = Cipher::Aes256Cbc) {
  SecurityConfig cfg;
  cfg.protocol = p;
  cfg.cipher = c;
  return cfg;
}

void esp_anchor() {
  const auto b = esp_tunnel_frame_length(62, cipher_suite(Cipher::Aes256Cbc));
  const bool ok = b.ct_frame_len == 138 && b.encrypted_payload == 64 && b.iv == 16 &&
                  b.esp_header == 8 && b.icv == 16 && b.outer_ip == 20 && b.eth_header == 14;
  report(1, "ESP tunnel SACK frame", ok,
         fmt("ct=%.0f B = %.0f+%.0f+%.0f", double(b.ct_frame_len), double(b.encrypted_payload),
             double(b.iv), double(b.esp_header)) +
             fmt("+%.0f+%.0f+%.0f", double(b.icv), double(b.outer_ip), double(b.eth_header)));
}

void macsec_plus_32() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<Bytes> len(60, 9000);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Bytes l = len(rng);
    for (bool enc : {true, false}) {
      if (macsec_frame_length(l, enc).ct_frame_len - l != 32) ++bad;
    }
  }
  report(2, "MACsec adds 32 B", bad == 0, fmt("2000 cases, %.0f mismatches", bad));
}

void transmission_table() {
  const std::pair<Bytes, double> rows[] = {{62, 0.0496},  {138, 0.1104},  {195, 0.1560},
                                           {255, 0.2040}, {1425, 1.140}, {1485, 1.188}};
  double worst = 0;
  for (auto [len, us] : rows) worst = std::max(worst, std::fabs(transmission_delay(len, {}) - us));
  report(3, "transmission delays at 10 Gb/s", worst <= 5e-4, fmt("max error %.2e us", worst));
}

void sack_decomposition() {
  // D_prop = 0.05 us, counted twice on the SACK path.
  const double pt = processing_from_total(61.12, 0, 2 * 0.05, transmission_delay(62, {}));
  const double ct = processing_from_total(82.64, 0, 2 * 0.05, transmission_delay(138, {}));
  const bool ok = std::fabs(pt - 60.97) <= 0.01 && std::fabs(ct - 82.43) <= 0.01;
  report(4, "SACK processing decomposition", ok,
         fmt("PT %.4f us, CT %.4f us (discrepancy vs 82.64: %.4f us)", pt, ct, 82.64 - ct));
}

void queuing() {
  bool ok = queuing_delta({833333.0, 500000.0, 0.0}) == 0.0;
  double prev = 0;
  for (double eps = 0; eps < 49000; eps += 1000) {
    const double d = queuing_delta({1e6, 0.95e6, eps});
    ok = ok && d >= prev;
    prev = d;
  }
  ok = ok && queuing_delta({1e6, 0.95e6, 49999}) > 1e4;
  bool threw = false;
  try {
    queuing_delta({1e6, 0.95e6, 0.05e6});
  } catch (const UnstableQueue&) {
    threw = true;
  }
  ok = ok && threw;
  const double load = max_load_for_queuing_delta(10e9, 1500, 60, 1.0) / 1e9;
  report(5, "queuing delta", ok,
         fmt("max load for delta <= 1 us (1500 B, +60 B) = %.4f Gb/s vs 9.78 Gb/s, "
             "deviation %.4f Gb/s (%.1f %%)",
             load, load - 9.78, 100 * (load - 9.78) / 9.78));
}

void caps() {
  const auto t = CipherCapTable::measured_e2();
  const std::pair<Cipher, double> rows[] = {
      {Cipher::Aes128Cbc, 505}, {Cipher::Aes256Cbc, 512},        {Cipher::Aes128Ccm, 573},
      {Cipher::Aes256Ccm, 573}, {Cipher::ChaCha20Poly1305, 989}, {Cipher::Aes256Gcm, 1370}};
  bool ok = true;
  for (auto [c, v] : rows) ok = ok && t.cap(c) == v;
  const CpuModel m;
  const double ratio = m.ct_slope / m.pt_slope;
  ok = ok && ratio >= 10 && ratio <= 100;
  report(6, "cipher caps and CPU slope ratio", ok, fmt("caps match, ct/pt slope %.1f", ratio));
}

void key_size() {
  const auto t = CipherCapTable::measured_e2();
  const double cbc = std::fabs(t.cap(Cipher::Aes256Cbc) - t.cap(Cipher::Aes128Cbc)) /
                     t.cap(Cipher::Aes256Cbc);
  const double ccm = std::fabs(t.cap(Cipher::Aes256Ccm) - t.cap(Cipher::Aes128Ccm)) /
                     t.cap(Cipher::Aes256Ccm);
  report(7, "AES128 vs AES256 caps", cbc <= 0.02 && ccm <= 0.02,
         fmt("CBC %.2f %%, CCM %.2f %%", 100 * cbc, 100 * ccm));
}

void profile_ordering() {
  const auto pt = e2_pt_profile(), gcm = e2_aes256gcm_profile(), cbc = e2_aes256cbc_profile();
  const auto fpt = fh_pt_profile(), mac = fh_macsec_profile(false), enc = fh_macsec_profile(true);
  bool ok = true;
  for (Bytes l = 62; l <= 9000; ++l) {
    const double x = double(l);
    ok = ok && gcm.at(x) == pt.at(x);
    if (l <= 1500) ok = ok && cbc.at(x) - pt.at(x) > 0 && cbc.at(x) - pt.at(x) <= 50;
    ok = ok && enc.at(x) - fpt.at(x) >= mac.at(x) - fpt.at(x) && mac.at(x) >= fpt.at(x);
  }
  ok = ok && mac.at(62) - fpt.at(62) == 39 && enc.at(62) - fpt.at(62) == 39 &&
       mac.at(9000) - fpt.at(9000) == 153 && enc.at(9000) - fpt.at(9000) == 218;
  report(8, "profile ordering", ok, "checked every length in [62, 9000]");
}

void mtu() {
  const auto cfg = with(Protocol::Macsec);
  const auto prof = fh_macsec_profile(true);
  const double d5 = mtu_transfer_model(8192, 5000, cfg, prof, {}).total_delay;
  const double d8 = mtu_transfer_model(8192, 8000, cfg, prof, {}).total_delay;
  FileTransferParams p;
  p.file_size = 1'000'000'000;
  p.cfg = cfg;
  p.mtu = 1400;
  const double t1 = file_transfer_model(p).throughput;
  p.mtu = 9000;
  const double t2 = file_transfer_model(p).throughput;
  const double gain = 100 * (t2 / t1 - 1);
  report(9, "MTU model", d5 < d8 && std::fabs(gain - 20) <= 5,
         fmt("delay MTU 5000 %.2f us < MTU 8000 %.2f us; throughput 1400->9000 %+.1f %%", d5, d8,
             gain));
}

void feasibility() {
  const char* const published[] = {
      "EEEEENNNPPPPPP", "EENNNPPPPPPPPX", "ENNNPPPPPPPPXX", "ENNPPPPPPPPXXX",
      "ENPPPPPPPPXXXX", "EPPPPPPPPXXXXX", "EPPPPPPPXXXXXX", "EPPPPPPXXXXXXX",
      "EPPPPPXXXXXXXX", "EPPPPXXXXXXXXX", "EPPPXXXXXXXXXX", "EPPXXXXXXXXXXX",
  };
  const auto& t = LatencyBudgetTable::wg4();
  const auto c = classify_table(t);
  int mismatches = 0;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t col = 0; col < t.cols(); ++col) {
      if (region_letter(c.regions[r][col]) != published[r][col]) ++mismatches;
    }
  }
  const auto iv = baseline_interval_from_coloring(t, c.regions, {});
  const bool ok = mismatches == 0 && c.count(Region::FeasibleWithEncryption) == 17 &&
                  c.count(Region::FeasibleWithoutEncryptionOnly) == 12 &&
                  c.count(Region::FeasibleWithoutMacsecOnly) == 73 &&
                  c.count(Region::Infeasible) == 66 && iv.low == 115 && iv.high == 121;
  report(10, "feasibility regions", ok,
         fmt("%.0f cell mismatches, counts %.0f/%.0f/", mismatches,
             double(c.count(Region::FeasibleWithEncryption)),
             double(c.count(Region::FeasibleWithoutEncryptionOnly))) +
             fmt("%.0f/%.0f, baseline interval (%.0f, %.0f]",
                 double(c.count(Region::FeasibleWithoutMacsecOnly)),
                 double(c.count(Region::Infeasible)), iv.low, iv.high));
}

void traceio() {
  bool ok = true;
  for (bool nano : {false, true}) {
    for (bool big : {false, true}) {
      auto img = fixtures::pcap_header(nano, big);
      fixtures::pcap_record(img, 1700000000, nano ? 123456789 : 123456,
                            fixtures::sctp_frame(62, 3), big);
      fixtures::pcap_record(img, 1700000001, 7, fixtures::sctp_frame(1425, 0), big, 1500);
      const auto t = parse_pcap(img);
      ok = ok && t.records.size() == 2 &&
           t.records[0].timestamp_ns == 1700000000LL * 1'000'000'000 + (nano ? 123456789 : 123456000) &&
           t.records[1].timestamp_ns == 1700000001LL * 1'000'000'000 + (nano ? 7 : 7000) &&
           t.records[0].original_len == 62 && t.records[1].captured_len == 1425 &&
           t.records[1].original_len == 1500;
    }
  }

  Trace two;
  two.records.resize(2);
  two.records[0].original_len = 62;
  two.records[1].original_len = 1425;
  const auto cdf = empirical_cdf(two);
  ok = ok && cdf.size() == 2 && cdf[0].length == 62 && cdf[0].cumulative_fraction == 0.5 &&
       cdf[1].length == 1425 && cdf[1].cumulative_fraction == 1.0;

  std::mt19937 rng(99);
  std::uniform_int_distribution<Bytes> len(62, 9000);
  Trace big;
  for (int i = 0; i < 1000; ++i) {
    PacketRecord r;
    r.timestamp_ns = 125'000LL * i;
    r.original_len = r.captured_len = len(rng);
    r.classification = i % 2 ? PacketClass::EcpriUserPlane : PacketClass::EcpriControlPlane;
    big.records.push_back(r);
  }
  const auto rep = project_secured(big, with(Protocol::Macsec), fh_macsec_profile(true),
                                   fh_pt_profile());
  Bytes pt = 0, ct = 0;
  double proc = 0;
  for (const auto& r : big.records) {
    pt += r.original_len;
    ct += r.original_len + 32;
    const double l = double(r.original_len);
    proc += 118 + (l <= 1500 ? 39 : 39 + (l - 1500) * (218.0 - 39.0) / (9000 - 1500));
  }
  ok = ok && rep.total.pt_bytes == pt && rep.total.ct_bytes == ct &&
       std::fabs(rep.total.ct_proc_mean - proc / 1000) < 1e-9;
  report(11, "trace I/O and projection", ok,
         "4 pcap variants, two-packet CDF, 1000-packet projection");
}

void properties() {
  std::mt19937 rng(7);
  int cases = 0, bad = 0;

  std::uniform_int_distribution<Bytes> payload(1, 20000), mtu(20, 9000);
  for (int i = 0; i < 1000; ++i, ++cases) {
    const Bytes p = payload(rng), m = mtu(rng);
    for (auto s : {FragmentStrategy::Greedy, FragmentStrategy::EvenSplit}) {
      const auto plan = fragment_payload(p, m, 8, s);
      Bytes sum = std::accumulate(plan.fragments.begin(), plan.fragments.end(), Bytes{0});
      bool fits = true;
      for (Bytes f : plan.fragments) fits = fits && f > 0 && f + 8 <= m;
      if (sum != p || !fits) ++bad;
    }
  }

  std::uniform_int_distribution<Bytes> plen(60, 9000);
  for (int i = 0; i < 1000; ++i, ++cases) {
    Trace t;
    const int n = 1 + i % 50;
    for (int k = 0; k < n; ++k) {
      PacketRecord r;
      r.original_len = plen(rng);
      t.records.push_back(r);
    }
    const auto cdf = empirical_cdf(t);
    for (std::size_t k = 1; k < cdf.size(); ++k) {
      if (!(cdf[k].length > cdf[k - 1].length &&
            cdf[k].cumulative_fraction > cdf[k - 1].cumulative_fraction)) {
        ++bad;
      }
    }
    if (cdf.back().cumulative_fraction != 1.0) ++bad;
  }

  std::uniform_int_distribution<Bytes> flen(34, 8900);
  for (int i = 0; i < 1000; ++i, ++cases) {
    const Bytes l = flen(rng);
    for (auto c : {Cipher::Aes256Cbc, Cipher::Aes256Gcm}) {
      const auto s = cipher_suite(c);
      const Bytes a = esp_tunnel_frame_length(l, s).ct_frame_len;
      if (a > esp_tunnel_frame_length(l + 1, s).ct_frame_len) ++bad;
      if (esp_tunnel_frame_length(l + s.block_align, s).ct_frame_len != a + s.block_align) ++bad;
    }
  }

  std::uniform_real_distribution<double> budget(0, 600), base(0, 200), d(0, 200);
  for (int i = 0; i < 1000; ++i, ++cases) {
    SecurityDelayAssumptions a{base(rng), d(rng), 0};
    a.delta_macsec_enc = a.delta_macsec + d(rng);
    const double b1 = budget(rng), b2 = b1 + budget(rng);
    const auto r1 = classify_cell(b1, a), r2 = classify_cell(b2, a);
    if (region_strength(r2) < region_strength(r1)) ++bad;
    if (r2 == Region::FeasibleWithEncryption && b2 < a.baseline_oneway + a.delta_macsec) ++bad;
  }
  report(12, "property suites", bad == 0,
         fmt("%.0f randomized cases across 4 suites, %.0f violations", cases, bad));
}

}  // namespace

int main() {
  const std::function<void()> checks[] = {esp_anchor,  macsec_plus_32, transmission_table,
                                          sack_decomposition, queuing, caps, key_size,
                                          profile_ordering, mtu, feasibility, traceio, properties};
  for (std::size_t i = 0; i < std::size(checks); ++i) {
    try {
      checks[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "unexpected exception", false, e.what());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(checks)) - failures,
              std::size(checks));
  return failures == 0 ? 0 : 1;
}
