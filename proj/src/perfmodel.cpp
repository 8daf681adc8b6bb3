#include "seccost/perfmodel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seccost/error.hpp"

namespace seccost {

CipherCapTable::CipherCapTable(std::map<Cipher, Mbps> entries) : entries_(std::move(entries)) {
  validate();
}

CipherCapTable CipherCapTable::measured_e2() {
  return CipherCapTable({
      {Cipher::Aes128Cbc, 505},
      {Cipher::Aes256Cbc, 512},
      {Cipher::Aes128Ccm, 573},
      {Cipher::Aes256Ccm, 573},
      {Cipher::ChaCha20Poly1305, 989},
      {Cipher::Aes256Gcm, 1370},
  });
}

void CipherCapTable::validate() const {
  Mbps best = 0;
  Mbps best_gcm = 0;
  for (const auto& [c, cap] : entries_) {
    if (!(cap > 0) || !std::isfinite(cap)) {
      throw InvalidConfig("cap for " + std::string(cipher_name(c)) + " must be positive");
    }
    best = std::max(best, cap);
    if (c == Cipher::Aes128Gcm || c == Cipher::Aes256Gcm) best_gcm = std::max(best_gcm, cap);
  }
  if (best_gcm > 0 && best_gcm < best) {
    throw InvalidConfig("AES-GCM must have the highest throughput cap");
  }
}

Mbps CipherCapTable::cap(Cipher c) const {
  auto it = entries_.find(c);
  if (it == entries_.end()) {
    throw UnknownCipher("no throughput cap for cipher " + std::string(cipher_name(c)));
  }
  return it->second;
}

void CipherCapTable::set(Cipher c, Mbps cap) {
  auto previous = entries_;
  entries_[c] = cap;
  try {
    validate();
  } catch (...) {
    entries_ = std::move(previous);
    throw;
  }
}

Mbps achieved_throughput(Mbps attempted, Cipher cipher, const CipherCapTable& caps) {
  if (!(attempted >= 0)) throw InvalidConfig("attempted rate must be non-negative");
  return std::min(attempted, caps.cap(cipher));
}

void CpuModel::validate() const {
  if (!(pt_slope > 0 && pt_slope < ct_slope)) {
    throw InvalidConfig("CPU slopes must satisfy 0 < pt_slope < ct_slope");
  }
  if (!(saturation > 0 && saturation <= 1)) {
    throw InvalidConfig("CPU saturation must lie in (0, 1]");
  }
}

CpuModel CpuModel::fronthaul() {
  CpuModel m;
  m.saturation = 0.8;
  return m;
}

double cpu_utilization(Mbps rate, bool encrypted, const CpuModel& model) {
  model.validate();
  if (!(rate >= 0)) throw InvalidConfig("rate must be non-negative");
  return std::min((encrypted ? model.ct_slope : model.pt_slope) * rate, model.saturation);
}

LoadLatencyProfile::LoadLatencyProfile(std::string name, std::vector<LoadLatencyAnchor> anchors,
                                       Mbps cap)
    : name_(std::move(name)), anchors_(std::move(anchors)), cap_(cap) {
  if (anchors_.size() < 2) throw ProfileError("load profile '" + name_ + "' needs two anchors");
  for (std::size_t i = 1; i < anchors_.size(); ++i) {
    if (!(anchors_[i].offered > anchors_[i - 1].offered)) {
      throw ProfileError("load profile '" + name_ + "' rates must increase");
    }
    if (anchors_[i].added_delay < anchors_[i - 1].added_delay) {
      throw ProfileError("load profile '" + name_ + "' delays must not decrease");
    }
  }
  if (anchors_.front().added_delay < 0) throw ProfileError("negative load-profile delay");
  if (!(cap_ > 0)) throw ProfileError("load profile cap must be positive");
}

LoadLatencyProfile LoadLatencyProfile::fh_macsec(bool encrypt) {
  return LoadLatencyProfile(encrypt ? "fh-macsec-enc" : "fh-macsec",
                            {{0, 39}, {kFronthaulMacsecCap, encrypt ? 4300.0 : 3200.0}},
                            kFronthaulMacsecCap);
}

LoadLatency load_latency(Mbps offered, const LoadLatencyProfile& profile) {
  if (!(offered >= 0)) throw InvalidConfig("offered rate must be non-negative");
  LoadLatency out;
  double rate = offered;
  if (rate > profile.cap()) {
    out.saturated = true;
    rate = profile.cap();
  }
  const auto& a = profile.anchors();
  if (rate <= a.front().offered) {
    out.added_delay = a.front().added_delay;
  } else if (rate >= a.back().offered) {
    out.added_delay = a.back().added_delay;
  } else {
    auto hi = std::upper_bound(a.begin(), a.end(), rate, [](double r, const LoadLatencyAnchor& x) {
      return r < x.offered;
    });
    auto lo = hi - 1;
    const double t = (rate - lo->offered) / (hi->offered - lo->offered);
    out.added_delay = lo->added_delay + t * (hi->added_delay - lo->added_delay);
  }
  return out;
}

}  // namespace seccost
