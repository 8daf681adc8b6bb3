#include "seccost/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "seccost/config.hpp"
#include "seccost/delaymodel.hpp"
#include "seccost/error.hpp"
#include "seccost/feasibility.hpp"
#include "seccost/mtu.hpp"
#include "seccost/overhead.hpp"
#include "seccost/perfmodel.hpp"
#include "seccost/report.hpp"
#include "seccost/traceio.hpp"

namespace seccost::cli {
namespace {

using report::fixed4;
using report::r4;

/// Bad flag value found after CLI11 parsing; reported like a parse error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Table };

struct Common {
  std::string output = "table";
  std::string out_file;
  std::string config_file;
};

struct SecurityFlags {
  std::string protocol = "none";
  std::string cipher = "aes256-cbc";
  bool no_encrypt = false;
  std::size_t tls_overhead = kTlsMinRecordOverhead;

  SecurityConfig build() const {
    SecurityConfig cfg;
    auto p = parse_protocol(protocol);
    if (!p) throw UsageError("--protocol: unknown protocol '" + protocol + "'");
    auto c = parse_cipher(cipher);
    if (!c) throw UsageError("--cipher: unknown cipher '" + cipher + "'");
    cfg.protocol = *p;
    cfg.cipher = *c;
    cfg.macsec_encrypt = !no_encrypt;
    cfg.tls_record_overhead = tls_overhead;
    return cfg;
  }
};

void add_security_flags(CLI::App* sub, SecurityFlags& f, const std::string& default_protocol) {
  f.protocol = default_protocol;
  sub->add_option("--protocol", f.protocol,
                  "none | esp-tunnel | esp-transport | macsec | tls | sshv2")
      ->capture_default_str();
  sub->add_option("--cipher", f.cipher, "ESP/TLS cipher, e.g. aes256-cbc, aes256-gcm")
      ->capture_default_str();
  sub->add_flag("--no-encrypt", f.no_encrypt, "MACsec integrity only");
  sub->add_option("--tls-overhead", f.tls_overhead, "TLS per-record overhead in bytes")
      ->capture_default_str();
}

struct LinkFlags {
  double rate = kTenGigabit;
  double distance = 100.0;

  LinkSpec build() const { return {rate, distance, kDefaultPropSpeed}; }
};

void add_link_flags(CLI::App* sub, LinkFlags& f) {
  sub->add_option("--rate", f.rate, "link rate in b/s")->capture_default_str();
  sub->add_option("--distance", f.distance, "link length in meters")->capture_default_str();
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Table;
}

Config load_config(const Common& common) {
  std::string path = common.config_file;
  if (path.empty()) {
    if (const char* env = std::getenv("SECCOST_CONFIG"); env != nullptr) path = env;
  }
  return path.empty() ? Config{} : load_config_file(path);
}

struct MtuRange {
  Bytes lo, hi, step;
};

MtuRange parse_mtu_range(const std::string& text) {
  MtuRange r{};
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  long long lo = 0, hi = 0, step = 0;
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof() || lo <= 0 ||
      hi < lo || step <= 0) {
    throw UsageError("--mtu: expected LO:HI:STEP with 0 < LO <= HI and STEP > 0, got '" + text +
                     "'");
  }
  r.lo = static_cast<Bytes>(lo);
  r.hi = static_cast<Bytes>(hi);
  r.step = static_cast<Bytes>(step);
  return r;
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

// --- subcommand handlers ------------------------------------------------

struct OverheadArgs {
  SecurityFlags sec;
  std::size_t frame_len = 0;
};

void run_overhead(const OverheadArgs& a, Format fmt, std::ostream& out) {
  const auto cfg = a.sec.build();
  if (cfg.protocol == Protocol::None) throw UsageError("--protocol: 'none' adds no overhead");
  const auto b = secure_frame(a.frame_len, cfg);
  switch (fmt) {
    case Format::Json: {
      auto j = report::to_json(b);
      j["protocol"] = protocol_name(cfg.protocol);
      if (cfg.protocol == Protocol::EspTunnel || cfg.protocol == Protocol::EspTransport) {
        j["cipher"] = cipher_name(cfg.cipher);
      }
      print_json(out, j);
      break;
    }
    case Format::Csv:
      report::write_csv(out, b);
      break;
    case Format::Table:
      out << "protocol        " << protocol_name(cfg.protocol) << '\n';
      if (cfg.protocol == Protocol::EspTunnel || cfg.protocol == Protocol::EspTransport) {
        out << "cipher          " << cipher_name(cfg.cipher) << '\n';
      }
      out << "pt frame        " << b.pt_frame_len << " B\n"
          << "outer headers   " << b.outer_headers << " B\n"
          << "iv              " << b.iv << " B\n"
          << "padding         " << b.padding << " B\n"
          << "trailer         " << b.trailer << " B\n"
          << "icv             " << b.icv << " B\n"
          << "overhead        " << b.overhead_total << " B\n"
          << "ct frame        " << b.ct_frame_len << " B\n";
      break;
  }
}

struct DelayArgs {
  SecurityFlags sec;
  LinkFlags link;
  std::size_t frame_len = 0;
  std::string profile = "e2-pt";
  double queuing = 0;
};

void run_delay(const DelayArgs& a, const Config& config, Format fmt, std::ostream& out) {
  const auto cfg = a.sec.build();
  const auto profile = config.profile(a.profile);
  const auto link = a.link.build();
  const Bytes ct = secure_frame(a.frame_len, cfg).ct_frame_len;
  const auto d = total_delay(a.queuing, propagation_delay(link), transmission_delay(ct, link),
                             processing_delay(a.frame_len, profile));
  switch (fmt) {
    case Format::Json: {
      auto j = report::to_json(d);
      j["frame_len"] = a.frame_len;
      j["ct_frame_len"] = ct;
      j["profile"] = profile.name();
      print_json(out, j);
      break;
    }
    case Format::Csv:
      report::write_csv_header(out, d);
      report::write_csv_row(out, d);
      break;
    case Format::Table:
      out << "frame           " << a.frame_len << " B (on wire " << ct << " B)\n"
          << "profile         " << profile.name() << '\n'
          << "queuing         " << fixed4(d.queuing) << " us\n"
          << "propagation     " << fixed4(d.propagation) << " us\n"
          << "transmission    " << fixed4(d.transmission) << " us\n"
          << "processing      " << fixed4(d.processing) << " us\n"
          << "total           " << fixed4(d.total) << " us\n";
      break;
  }
}

void run_rtt(const DelayArgs& a, const Config& config, Format fmt, std::ostream& out) {
  const auto cfg = a.sec.build();
  const auto profile = config.profile(a.profile);
  const auto link = a.link.build();
  const Bytes ct = secure_frame(a.frame_len, cfg).ct_frame_len;
  const Micros proc = processing_delay(a.frame_len, profile);
  const Micros trans = transmission_delay(ct, link);
  const Micros prop = propagation_delay(link);
  const Micros rtt = 2.0 * (proc + trans + prop);
  switch (fmt) {
    case Format::Json:
      print_json(out, {{"frame_len", a.frame_len},
                       {"ct_frame_len", ct},
                       {"profile", profile.name()},
                       {"processing_us", r4(proc)},
                       {"transmission_us", r4(trans)},
                       {"propagation_us", r4(prop)},
                       {"rtt_us", r4(rtt)}});
      break;
    case Format::Csv:
      out << "frame_len,ct_frame_len,processing_us,transmission_us,propagation_us,rtt_us\n"
          << a.frame_len << ',' << ct << ',' << fixed4(proc) << ',' << fixed4(trans) << ','
          << fixed4(prop) << ',' << fixed4(rtt) << '\n';
      break;
    case Format::Table:
      out << "frame           " << a.frame_len << " B (on wire " << ct << " B)\n"
          << "profile         " << profile.name() << '\n'
          << "rtt             " << fixed4(rtt) << " us\n";
      break;
  }
}

struct QueuingArgs {
  double link_rate = kTenGigabit;
  double load = 0;
  std::size_t mean_frame = 1500;
  std::size_t overhead = 60;
  double max_delta = 1.0;
};

void run_queuing(const QueuingArgs& a, Format fmt, std::ostream& out) {
  const auto q = rates_from_bits(a.link_rate, a.load, a.mean_frame, a.overhead);
  const Micros wait = queuing_delay(q);
  const Micros delta = queuing_delta(q);
  const double max_load = max_load_for_queuing_delta(a.link_rate, a.mean_frame, a.overhead,
                                                     a.max_delta);
  switch (fmt) {
    case Format::Json:
      print_json(out, {{"service_rate_pps", r4(q.service_rate)},
                       {"arrival_rate_pps", r4(q.arrival_rate)},
                       {"overhead_rate_pps", r4(q.overhead_rate)},
                       {"queuing_us", r4(wait)},
                       {"queuing_delta_us", r4(delta)},
                       {"max_delta_us", r4(a.max_delta)},
                       {"max_load_bps", r4(max_load)}});
      break;
    case Format::Csv:
      out << "service_rate_pps,arrival_rate_pps,overhead_rate_pps,queuing_us,queuing_delta_us,"
             "max_delta_us,max_load_bps\n"
          << fixed4(q.service_rate) << ',' << fixed4(q.arrival_rate) << ','
          << fixed4(q.overhead_rate) << ',' << fixed4(wait) << ',' << fixed4(delta) << ','
          << fixed4(a.max_delta) << ',' << fixed4(max_load) << '\n';
      break;
    case Format::Table:
      out << "service rate    " << fixed4(q.service_rate) << " pkt/s\n"
          << "arrival rate    " << fixed4(q.arrival_rate) << " pkt/s\n"
          << "overhead rate   " << fixed4(q.overhead_rate) << " pkt/s\n"
          << "queuing         " << fixed4(wait) << " us\n"
          << "queuing delta   " << fixed4(delta) << " us\n"
          << "max load for delta <= " << fixed4(a.max_delta) << " us: " << fixed4(max_load / 1e9)
          << " Gb/s\n";
      break;
  }
}

struct ThroughputArgs {
  double attempted = 0;
  std::string cipher = "aes256-cbc";
};

void run_throughput(const ThroughputArgs& a, const Config& config, Format fmt, std::ostream& out) {
  auto c = parse_cipher(a.cipher);
  if (!c) throw UsageError("--cipher: unknown cipher '" + a.cipher + "'");
  const Mbps cap = config.caps.cap(*c);
  const Mbps achieved = achieved_throughput(a.attempted, *c, config.caps);
  const double cpu_pt = cpu_utilization(a.attempted, false, config.cpu);
  const double cpu_ct = cpu_utilization(achieved, true, config.cpu);
  switch (fmt) {
    case Format::Json:
      print_json(out, {{"cipher", cipher_name(*c)},
                       {"attempted_mbps", r4(a.attempted)},
                       {"cap_mbps", r4(cap)},
                       {"achieved_mbps", r4(achieved)},
                       {"capped", a.attempted > cap},
                       {"cpu_plaintext", r4(cpu_pt)},
                       {"cpu_encrypted", r4(cpu_ct)}});
      break;
    case Format::Csv:
      out << "cipher,attempted_mbps,cap_mbps,achieved_mbps,capped,cpu_plaintext,cpu_encrypted\n"
          << cipher_name(*c) << ',' << fixed4(a.attempted) << ',' << fixed4(cap) << ','
          << fixed4(achieved) << ',' << (a.attempted > cap ? 1 : 0) << ',' << fixed4(cpu_pt)
          << ',' << fixed4(cpu_ct) << '\n';
      break;
    case Format::Table:
      out << "cipher          " << cipher_name(*c) << '\n'
          << "attempted       " << fixed4(a.attempted) << " Mb/s\n"
          << "cap             " << fixed4(cap) << " Mb/s\n"
          << "achieved        " << fixed4(achieved) << " Mb/s" << (a.attempted > cap ? " (capped)" : "")
          << '\n'
          << "cpu plaintext   " << fixed4(100 * cpu_pt) << " %\n"
          << "cpu encrypted   " << fixed4(100 * cpu_ct) << " %\n";
      break;
  }
}

struct MtuArgs {
  SecurityFlags sec;
  LinkFlags link;
  std::size_t payload = kMaxEcpriPayload;
  std::string range = "1400:9000:100";
  std::string profile = "fh-macsec-enc";
  std::string strategy = "greedy";
  std::size_t header = kEcpriHeaderLen;
  bool strict = false;
  bool pipelined = false;
};

void run_mtu_sweep(const MtuArgs& a, const Config& config, Format fmt, std::ostream& out) {
  const auto cfg = a.sec.build();
  const auto range = parse_mtu_range(a.range);
  MtuModelOptions opts;
  opts.per_fragment_header = a.header;
  opts.strict = a.strict;
  opts.pipelined = a.pipelined;
  if (a.strategy == "greedy") {
    opts.strategy = FragmentStrategy::Greedy;
  } else if (a.strategy == "even") {
    opts.strategy = FragmentStrategy::EvenSplit;
  } else {
    throw UsageError("--strategy: expected greedy or even, got '" + a.strategy + "'");
  }
  const auto profile = config.profile(a.profile);
  const auto link = a.link.build();
  const auto rows = mtu_sweep(a.payload, cfg, profile, link, range.lo, range.hi, range.step, opts);
  if (rows.empty()) throw MtuTooSmall("no MTU in the sweep can carry a fragment");
  const auto best = optimal_mtu(a.payload, cfg, profile, link, range.lo, range.hi, range.step, opts);
  switch (fmt) {
    case Format::Json:
      print_json(out, {{"payload", a.payload},
                       {"profile", profile.name()},
                       {"rows", report::to_json(rows)},
                       {"optimum", {{"mtu", best.mtu}, {"total_delay_us", r4(best.delay)}}}});
      break;
    case Format::Csv:
      report::write_csv(out, rows);
      break;
    case Format::Table:
      report::write_csv(out, rows);
      out << "# optimum mtu " << best.mtu << " (" << fixed4(best.delay) << " us)\n";
      break;
  }
}

struct FeasibilityArgs {
  double baseline = 118.0;
  double delta_enc = 218.0;
  double delta_noenc = 153.0;
  std::string table;
};

void run_feasibility(const FeasibilityArgs& a, Format fmt, std::ostream& out) {
  std::optional<LatencyBudgetTable> loaded;
  if (!a.table.empty()) {
    std::ifstream in(a.table);
    if (!in) throw Error("cannot open budget table '" + a.table + "'");
    loaded = LatencyBudgetTable::from_csv(in);
  }
  const auto& table = loaded ? *loaded : LatencyBudgetTable::wg4();
  const SecurityDelayAssumptions assumptions{a.baseline, a.delta_noenc, a.delta_enc};
  const auto classified = classify_table(table, assumptions);
  switch (fmt) {
    case Format::Json: {
      auto j = report::to_json(table, classified);
      j["baseline_us"] = r4(a.baseline);
      j["delta_macsec_us"] = r4(a.delta_noenc);
      j["delta_macsec_enc_us"] = r4(a.delta_enc);
      print_json(out, j);
      break;
    }
    case Format::Csv:
      report::write_regions_csv(out, table, classified);
      break;
    case Format::Table:
      report::write_regions_grid(out, table, classified);
      break;
  }
}

struct AnalyzeArgs {
  SecurityFlags sec;
  std::string pcap;
  std::string csv;
  std::string interface = "e2";
  std::string profile;
  std::string baseline_profile;
  std::size_t threshold = kDefaultE2apThreshold;
  std::string cdf_file;
};

void run_analyze(const AnalyzeArgs& a, const Config& config, Format fmt, std::ostream& out) {
  if (a.pcap.empty() == a.csv.empty()) throw UsageError("analyze: give exactly one of --pcap or --csv");
  const bool e2 = a.interface == "e2";
  if (!e2 && a.interface != "fronthaul") {
    throw UsageError("--interface: expected e2 or fronthaul, got '" + a.interface + "'");
  }
  const auto cfg = a.sec.build();

  Trace trace;
  std::size_t malformed = 0;
  if (!a.pcap.empty()) {
    trace = read_pcap_file(a.pcap);
    if (e2) {
      trace = classify_e2(std::move(trace), a.threshold);
    } else {
      auto fh = classify_fronthaul(std::move(trace));
      trace = std::move(fh.trace);
      malformed = fh.malformed;
    }
  } else {
    std::ifstream in(a.csv);
    if (!in) throw Error("cannot open trace CSV '" + a.csv + "'");
    trace = parse_trace_csv(in, a.csv);
  }

  const std::string secured_name =
      !a.profile.empty() ? a.profile
                         : (e2 ? (cfg.cipher == Cipher::Aes256Gcm ? "e2-aes256gcm" : "e2-aes256cbc")
                               : (cfg.macsec_encrypt ? "fh-macsec-enc" : "fh-macsec"));
  const std::string baseline_name =
      !a.baseline_profile.empty() ? a.baseline_profile : (e2 ? "e2-pt" : "fh-pt");
  const auto summary = summarize(trace);
  const auto projection =
      project_secured(trace, cfg, config.profile(secured_name), config.profile(baseline_name));

  if (!a.cdf_file.empty()) {
    std::ofstream cdf(a.cdf_file);
    if (!cdf) throw Error("cannot write CDF file '" + a.cdf_file + "'");
    report::write_csv(cdf, empirical_cdf(trace));
  }

  switch (fmt) {
    case Format::Json:
      print_json(out, {{"source", trace.source},
                       {"interface", a.interface},
                       {"malformed", malformed},
                       {"summary", report::to_json(summary)},
                       {"projection", report::to_json(projection)}});
      break;
    case Format::Csv:
      report::write_csv(out, projection);
      break;
    case Format::Table:
      out << "source          " << trace.source << '\n'
          << "packets         " << summary.count << '\n'
          << "duration        " << summary.duration_s << " s\n"
          << "offered load    "
          << (summary.offered_load_bps ? fixed4(*summary.offered_load_bps / 1e3) + " kb/s" : "n/a")
          << '\n';
      if (malformed > 0) out << "malformed eCPRI " << malformed << '\n';
      report::write_csv(out, projection);
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Security cost analyzer for O-RAN open interfaces", "seccost"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Common common;
  app.add_option("--output,-o", common.output, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--out", common.out_file, "write the report to FILE instead of stdout");
  app.add_option("--config", common.config_file, "configuration file (or SECCOST_CONFIG)");

  OverheadArgs overhead;
  auto* c_overhead = app.add_subcommand("overhead", "secured frame size and overhead breakdown");
  add_security_flags(c_overhead, overhead.sec, "esp-tunnel");
  c_overhead->add_option("--frame-len", overhead.frame_len, "plaintext frame length in bytes")
      ->required();

  DelayArgs delay;
  auto* c_delay = app.add_subcommand("delay", "one-way delay breakdown of a single frame");
  add_security_flags(c_delay, delay.sec, "none");
  add_link_flags(c_delay, delay.link);
  c_delay->add_option("--frame-len", delay.frame_len, "plaintext frame length in bytes")->required();
  c_delay->add_option("--profile", delay.profile, "processing profile")->capture_default_str();
  c_delay->add_option("--queuing", delay.queuing, "queuing delay in us")->capture_default_str();

  DelayArgs rtt;
  auto* c_rtt = app.add_subcommand("rtt", "round-trip estimate 2 x (proc + trans + prop)");
  add_security_flags(c_rtt, rtt.sec, "none");
  add_link_flags(c_rtt, rtt.link);
  c_rtt->add_option("--frame-len", rtt.frame_len, "plaintext frame length in bytes")->required();
  c_rtt->add_option("--profile", rtt.profile, "processing profile")->capture_default_str();

  QueuingArgs queuing;
  auto* c_queuing = app.add_subcommand("queuing", "M/M/1 queuing delay and the security delta");
  c_queuing->add_option("--link-rate", queuing.link_rate, "link rate in b/s")->capture_default_str();
  c_queuing->add_option("--load", queuing.load, "offered load in b/s")->required();
  c_queuing->add_option("--mean-frame", queuing.mean_frame, "mean frame size in bytes")
      ->capture_default_str();
  c_queuing->add_option("--overhead", queuing.overhead, "per-packet security overhead in bytes")
      ->capture_default_str();
  c_queuing->add_option("--max-delta", queuing.max_delta, "delta bound for the max-load search (us)")
      ->capture_default_str();

  ThroughputArgs throughput;
  auto* c_throughput = app.add_subcommand("throughput", "achieved throughput and CPU cost");
  c_throughput->add_option("--attempted", throughput.attempted, "attempted rate in Mb/s")->required();
  c_throughput->add_option("--cipher", throughput.cipher, "cipher")->capture_default_str();

  MtuArgs mtu;
  auto* c_mtu = app.add_subcommand("mtu-sweep", "fragmentation delay/throughput across MTUs");
  add_security_flags(c_mtu, mtu.sec, "macsec");
  add_link_flags(c_mtu, mtu.link);
  c_mtu->add_option("--payload", mtu.payload, "payload bytes")->capture_default_str();
  c_mtu->add_option("--mtu", mtu.range, "LO:HI:STEP")->capture_default_str();
  c_mtu->add_option("--profile", mtu.profile, "processing profile")->capture_default_str();
  c_mtu->add_option("--strategy", mtu.strategy, "greedy | even")->capture_default_str();
  c_mtu->add_option("--header", mtu.header, "per-fragment header bytes")->capture_default_str();
  c_mtu->add_flag("--strict", mtu.strict, "reserve the security overhead inside the MTU");
  c_mtu->add_flag("--pipelined", mtu.pipelined, "overlap fragment processing");

  FeasibilityArgs feas;
  auto* c_feas = app.add_subcommand("feasibility", "classify O-RU/O-DU pairs against WG4 budgets");
  c_feas->add_option("--baseline", feas.baseline, "baseline one-way delay in us")
      ->capture_default_str();
  c_feas->add_option("--delta-enc", feas.delta_enc, "added delay of encrypted MACsec in us")
      ->capture_default_str();
  c_feas->add_option("--delta-noenc", feas.delta_noenc, "added delay of integrity-only MACsec in us")
      ->capture_default_str();
  c_feas->add_option("--table", feas.table, "budget table CSV (default: built-in WG4 table)");

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "summarize a capture and project it secured");
  add_security_flags(c_analyze, analyze.sec, "none");
  c_analyze->add_option("--pcap", analyze.pcap, "classic pcap capture");
  c_analyze->add_option("--csv", analyze.csv, "CSV trace: ts_s,len_bytes,class");
  c_analyze->add_option("--interface", analyze.interface, "e2 | fronthaul")->capture_default_str();
  c_analyze->add_option("--profile", analyze.profile, "processing profile of the secured traffic");
  c_analyze->add_option("--baseline-profile", analyze.baseline_profile,
                        "processing profile of the plaintext traffic");
  c_analyze->add_option("--threshold", analyze.threshold, "short/long E2AP split in bytes")
      ->capture_default_str();
  c_analyze->add_option("--cdf", analyze.cdf_file, "also write the size CDF to FILE");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  try {
    const auto fmt = parse_format(common.output);
    const auto config = load_config(common);
    if (c_overhead->parsed()) {
      run_overhead(overhead, fmt, buffer);
    } else if (c_delay->parsed()) {
      run_delay(delay, config, fmt, buffer);
    } else if (c_rtt->parsed()) {
      run_rtt(rtt, config, fmt, buffer);
    } else if (c_queuing->parsed()) {
      run_queuing(queuing, fmt, buffer);
    } else if (c_throughput->parsed()) {
      run_throughput(throughput, config, fmt, buffer);
    } else if (c_mtu->parsed()) {
      run_mtu_sweep(mtu, config, fmt, buffer);
    } else if (c_feas->parsed()) {
      run_feasibility(feas, fmt, buffer);
    } else if (c_analyze->parsed()) {
      run_analyze(analyze, config, fmt, buffer);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }

  if (common.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(common.out_file);
    if (!file) {
      err << "error: cannot write '" << common.out_file << "'\n";
      return kExitData;
    }
    file << buffer.str();
  }
  return kExitOk;
}

}  // namespace seccost::cli
