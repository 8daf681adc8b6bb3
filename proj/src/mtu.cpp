#include "seccost/mtu.hpp"

#include <algorithm>

#include "seccost/error.hpp"

namespace seccost {
namespace {

// Room to keep free inside the MTU for the security overhead in strict mode.
Bytes security_reserve(Bytes mtu, const SecurityConfig& cfg) {
  if (cfg.protocol == Protocol::None) return 0;
  auto b = secure_frame(mtu + kEthHeaderLen, cfg);
  Bytes reserve = b.overhead_total - b.padding;
  if (cfg.protocol == Protocol::EspTunnel || cfg.protocol == Protocol::EspTransport) {
    reserve += cipher_suite(cfg.cipher).block_align - 1;
  }
  return reserve;
}

}  // namespace

Bytes FragmentationPlan::usable() const { return mtu - per_fragment_header; }

FragmentationPlan fragment_payload(Bytes payload, Bytes mtu, Bytes per_fragment_header,
                                   FragmentStrategy strategy, Bytes reserve) {
  if (payload == 0) throw Error("payload must be positive");
  if (mtu <= per_fragment_header + reserve) {
    throw MtuTooSmall("MTU " + std::to_string(mtu) + " B leaves no room after " +
                      std::to_string(per_fragment_header + reserve) + " B of headers");
  }
  const Bytes usable = mtu - per_fragment_header - reserve;
  const Bytes count = (payload + usable - 1) / usable;

  FragmentationPlan plan{payload, mtu, per_fragment_header, strategy, {}};
  plan.fragments.reserve(count);
  if (strategy == FragmentStrategy::Greedy) {
    Bytes left = payload;
    while (left > 0) {
      const Bytes take = std::min(left, usable);
      plan.fragments.push_back(take);
      left -= take;
    }
  } else {
    const Bytes base = payload / count;
    const Bytes extra = payload % count;
    for (Bytes i = 0; i < count; ++i) plan.fragments.push_back(base + (i < extra ? 1 : 0));
  }
  return plan;
}

MtuTransferResult mtu_transfer_model(Bytes payload, Bytes mtu, const SecurityConfig& cfg,
                                     const ProcessingProfile& profile, const LinkSpec& link,
                                     const MtuModelOptions& options) {
  const Bytes reserve = options.strict ? security_reserve(mtu, cfg) : 0;
  MtuTransferResult r;
  r.plan = fragment_payload(payload, mtu, options.per_fragment_header, options.strategy, reserve);

  const Micros prop = propagation_delay(link);
  Micros max_proc = 0;
  Micros sum_other = 0;
  for (Bytes frag : r.plan.fragments) {
    FragmentDelay fd;
    fd.pt_frame_len = frag + options.per_fragment_header + kEthHeaderLen;
    fd.ct_frame_len = secure_frame(fd.pt_frame_len, cfg).ct_frame_len;
    fd.delay = total_delay(0, prop, transmission_delay(fd.ct_frame_len, link),
                           processing_delay(fd.pt_frame_len, profile));
    r.total_delay += fd.delay.total;
    max_proc = std::max(max_proc, fd.delay.processing);
    sum_other += fd.delay.propagation + fd.delay.transmission;
    r.frames.push_back(fd);
  }
  if (options.pipelined) r.total_delay = sum_other + max_proc;
  r.throughput = 8.0 * static_cast<double>(payload) / r.total_delay;
  return r;
}

std::vector<MtuSweepRow> mtu_sweep(Bytes payload, const SecurityConfig& cfg,
                                   const ProcessingProfile& profile, const LinkSpec& link,
                                   Bytes lo, Bytes hi, Bytes step,
                                   const MtuModelOptions& options) {
  if (step == 0) throw Error("MTU sweep step must be positive");
  if (lo > hi) throw Error("MTU sweep range is empty");
  std::vector<MtuSweepRow> rows;
  for (Bytes mtu = lo; mtu <= hi; mtu += step) {
    try {
      auto r = mtu_transfer_model(payload, mtu, cfg, profile, link, options);
      rows.push_back({mtu, r.plan.fragments.size(), r.total_delay, r.throughput});
    } catch (const MtuTooSmall&) {
      continue;
    }
  }
  return rows;
}

OptimalMtu optimal_mtu(Bytes payload, const SecurityConfig& cfg, const ProcessingProfile& profile,
                       const LinkSpec& link, Bytes lo, Bytes hi, Bytes step,
                       const MtuModelOptions& options) {
  auto rows = mtu_sweep(payload, cfg, profile, link, lo, hi, step, options);
  if (rows.empty()) throw MtuTooSmall("no MTU in the sweep can carry the payload");
  OptimalMtu best{rows.front().mtu, rows.front().total_delay};
  for (const auto& row : rows) {
    if (row.total_delay <= best.delay) best = {row.mtu, row.total_delay};
  }
  return best;
}

FileTransferResult file_transfer_model(const FileTransferParams& p) {
  if (p.file_size == 0) throw Error("file size must be positive");
  if (!(p.pipeline_rate > 0)) throw InvalidConfig("pipeline rate must be positive");
  p.link.validate();
  if (p.mtu <= p.l3l4_header || p.reference_mtu <= p.l3l4_header) {
    throw MtuTooSmall("MTU must exceed the " + std::to_string(p.l3l4_header) +
                      " B transport headers");
  }

  const Bytes per_frame = p.mtu - p.l3l4_header;
  const Bytes full = p.file_size / per_frame;
  const Bytes tail = p.file_size % per_frame;

  auto added_work = [&](Bytes pt_frame) {
    return std::max(0.0, p.secured.at(static_cast<double>(pt_frame)) -
                             p.baseline.at(static_cast<double>(pt_frame)));
  };

  FileTransferResult r;
  r.frames = full + (tail > 0 ? 1 : 0);
  const Bytes full_pt = p.mtu + kEthHeaderLen;
  const Bytes full_ct = secure_frame(full_pt, p.cfg).ct_frame_len;
  double work = static_cast<double>(full) * added_work(full_pt);
  r.wire_bytes = full * full_ct;
  if (tail > 0) {
    const Bytes tail_pt = tail + p.l3l4_header + kEthHeaderLen;
    r.wire_bytes += secure_frame(tail_pt, p.cfg).ct_frame_len;
    work += added_work(tail_pt);
  }
  r.goodput_fraction = static_cast<double>(p.file_size) / static_cast<double>(r.wire_bytes);

  const double rate_bps = p.pipeline_rate * 1e6;
  r.link_time_s = 8.0 * static_cast<double>(r.wire_bytes) / p.link.rate_bps;

  const double ref_work = added_work(p.reference_mtu + kEthHeaderLen);
  if (ref_work > 0) {
    // Seconds of pipeline time per microsecond of added work, pinned so that
    // reference-size frames move at exactly pipeline_rate.
    const double ref_payload_bits = 8.0 * static_cast<double>(p.reference_mtu - p.l3l4_header);
    r.pipeline_time_s = work * (ref_payload_bits / rate_bps) / ref_work;
  } else {
    r.pipeline_time_s = 8.0 * static_cast<double>(r.wire_bytes) / rate_bps;
  }
  r.duration_s = std::max(r.link_time_s, r.pipeline_time_s);
  r.throughput = 8.0 * static_cast<double>(p.file_size) / r.duration_s / 1e6;
  return r;
}

}  // namespace seccost
