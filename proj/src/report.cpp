#include "seccost/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace seccost::report {
namespace {

nlohmann::json optional_value(const std::optional<double>& v) {
  return v ? nlohmann::json(r4(*v)) : nlohmann::json(nullptr);
}

nlohmann::json to_json(const ClassProjection& c) {
  return {{"count", c.count},
          {"pt_bytes", c.pt_bytes},
          {"ct_bytes", c.ct_bytes},
          {"pt_mean_len", r4(c.pt_mean_len)},
          {"ct_mean_len", r4(c.ct_mean_len)},
          {"pt_proc_us", r4(c.pt_proc_mean)},
          {"ct_proc_us", r4(c.ct_proc_mean)},
          {"added_proc_us", r4(c.added_proc_mean)}};
}

void write_projection_row(std::ostream& out, std::string_view name, const ClassProjection& c) {
  out << name << ',' << c.count << ',' << fixed4(c.pt_mean_len) << ',' << fixed4(c.ct_mean_len)
      << ',' << fixed4(c.pt_proc_mean) << ',' << fixed4(c.ct_proc_mean) << ','
      << fixed4(c.added_proc_mean) << '\n';
}

}  // namespace

double r4(double v) {
  const double r = std::round(v * 1e4) / 1e4;
  return r == 0.0 ? 0.0 : r;  // no "-0.0000"
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", r4(v));
  return buf;
}

nlohmann::json to_json(const OverheadBreakdown& b) {
  return {{"pt_frame_len", b.pt_frame_len},   {"ct_frame_len", b.ct_frame_len},
          {"overhead_total", b.overhead_total}, {"outer_headers", b.outer_headers},
          {"iv", b.iv},                       {"padding", b.padding},
          {"trailer", b.trailer},             {"icv", b.icv},
          {"layout",
           {{"eth_header", b.eth_header},
            {"outer_ip", b.outer_ip},
            {"esp_header", b.esp_header},
            {"encrypted_payload", b.encrypted_payload}}}};
}

void write_csv(std::ostream& out, const OverheadBreakdown& b) {
  out << "layer,bytes\n"
      << "pt_frame," << b.pt_frame_len << '\n'
      << "outer_headers," << b.outer_headers << '\n'
      << "iv," << b.iv << '\n'
      << "padding," << b.padding << '\n'
      << "trailer," << b.trailer << '\n'
      << "icv," << b.icv << '\n'
      << "overhead_total," << b.overhead_total << '\n'
      << "ct_frame," << b.ct_frame_len << '\n';
}

nlohmann::json to_json(const DelayBreakdown& d) {
  return {{"queuing_us", r4(d.queuing)},
          {"propagation_us", r4(d.propagation)},
          {"transmission_us", r4(d.transmission)},
          {"processing_us", r4(d.processing)},
          {"total_us", r4(d.total)}};
}

void write_csv_header(std::ostream& out, const DelayBreakdown&) {
  out << "queuing_us,propagation_us,transmission_us,processing_us,total_us\n";
}

void write_csv_row(std::ostream& out, const DelayBreakdown& d) {
  out << fixed4(d.queuing) << ',' << fixed4(d.propagation) << ',' << fixed4(d.transmission) << ','
      << fixed4(d.processing) << ',' << fixed4(d.total) << '\n';
}

void write_csv(std::ostream& out, const std::vector<MtuSweepRow>& rows) {
  out << "mtu,fragments,total_delay_us,throughput_mbps\n";
  for (const auto& r : rows) {
    out << r.mtu << ',' << r.fragments << ',' << fixed4(r.total_delay) << ','
        << fixed4(r.throughput) << '\n';
  }
}

nlohmann::json to_json(const std::vector<MtuSweepRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"mtu", r.mtu},
                   {"fragments", r.fragments},
                   {"total_delay_us", r4(r.total_delay)},
                   {"throughput_mbps", r4(r.throughput)}});
  }
  return arr;
}

void write_regions_csv(std::ostream& out, const LatencyBudgetTable& t, const ClassifiedTable& c) {
  out << "ru,du,budget_us,region\n";
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t col = 0; col < t.cols(); ++col) {
      out << t.ru_categories()[r] << ',' << t.du_categories()[col] << ',' << t.at(r, col) << ','
          << region_name(c.regions[r][col]) << '\n';
    }
  }
}

void write_regions_grid(std::ostream& out, const LatencyBudgetTable& t, const ClassifiedTable& c) {
  char cell[16];
  out << "RU\\DU";
  for (const auto& d : t.du_categories()) {
    std::snprintf(cell, sizeof cell, "%7s", d.c_str());
    out << cell;
  }
  out << '\n';
  for (std::size_t r = 0; r < t.rows(); ++r) {
    std::snprintf(cell, sizeof cell, "%-5s", t.ru_categories()[r].c_str());
    out << cell;
    for (std::size_t col = 0; col < t.cols(); ++col) {
      std::snprintf(cell, sizeof cell, "%6.0f%c", t.at(r, col), region_letter(c.regions[r][col]));
      out << cell;
    }
    out << '\n';
  }
  out << "\nE = MACsec with encryption, N = MACsec without encryption, "
         "P = plaintext only, X = infeasible\n";
  for (std::size_t i = 0; i < kRegionCount; ++i) {
    const auto reg = static_cast<Region>(i);
    out << region_letter(reg) << ' ' << region_name(reg) << ": " << c.counts[i] << '\n';
  }
}

nlohmann::json to_json(const LatencyBudgetTable& t, const ClassifiedTable& c) {
  nlohmann::json counts;
  for (std::size_t i = 0; i < kRegionCount; ++i) {
    counts[std::string(region_name(static_cast<Region>(i)))] = c.counts[i];
  }
  nlohmann::json grid = nlohmann::json::object();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    std::string row;
    for (std::size_t col = 0; col < t.cols(); ++col) row += region_letter(c.regions[r][col]);
    grid[t.ru_categories()[r]] = row;
  }
  return {{"counts", counts}, {"grid", grid}, {"du_categories", t.du_categories()}};
}

void write_csv(std::ostream& out, const SizeCdf& cdf) {
  out << "length,cum_fraction\n";
  char buf[32];
  for (const auto& p : cdf) {
    std::snprintf(buf, sizeof buf, "%.6f", p.cumulative_fraction);
    out << p.length << ',' << buf << '\n';
  }
}

nlohmann::json to_json(const TraceSummary& s) {
  nlohmann::json classes = nlohmann::json::object();
  for (auto c : kAllPacketClasses) {
    const auto& cs = s.of(c);
    if (cs.count == 0) continue;
    classes[std::string(packet_class_name(c))] = {
        {"count", cs.count}, {"bytes", cs.total_bytes}, {"mean_len", r4(cs.mean_len)}};
  }
  return {{"count", s.count},
          {"classes", classes},
          {"mean_len", r4(s.mean_len)},
          {"min_len", s.min_len},
          {"max_len", s.max_len},
          {"p50_len", s.p50_len},
          {"p90_len", s.p90_len},
          {"p99_len", s.p99_len},
          {"duration_s", s.duration_s},
          {"offered_load_bps", optional_value(s.offered_load_bps)}};
}

nlohmann::json to_json(const ProjectionReport& p) {
  nlohmann::json classes = nlohmann::json::object();
  for (auto c : kAllPacketClasses) {
    if (p.of(c).count == 0) continue;
    classes[std::string(packet_class_name(c))] = to_json(p.of(c));
  }
  return {{"protocol", p.protocol},
          {"cipher", p.cipher},
          {"classes", classes},
          {"total", to_json(p.total)},
          {"duration_s", p.duration_s},
          {"pt_load_bps", optional_value(p.pt_load_bps)},
          {"ct_load_bps", optional_value(p.ct_load_bps)}};
}

void write_csv(std::ostream& out, const ProjectionReport& p) {
  out << "class,count,pt_mean_len,ct_mean_len,pt_proc_us,ct_proc_us,added_proc_us\n";
  for (auto c : kAllPacketClasses) {
    if (p.of(c).count == 0) continue;
    write_projection_row(out, packet_class_name(c), p.of(c));
  }
  write_projection_row(out, "total", p.total);
}

}  // namespace seccost::report
