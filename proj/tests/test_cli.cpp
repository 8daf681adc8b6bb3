#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "json.hpp"
#include "seccost/cli.hpp"
#include "seccost/delaymodel.hpp"
#include "seccost/feasibility.hpp"
#include "seccost/mtu.hpp"
#include "seccost/overhead.hpp"
#include "seccost/report.hpp"

using namespace seccost;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / name; }

// Splits CSV text into its numeric cells, skipping headers and labels.
std::vector<double> numbers(const std::string& text) {
  std::vector<double> v;
  std::string cell;
  for (char c : text + "\n") {
    if (c == ',' || c == '\n') {
      char* end = nullptr;
      const double d = std::strtod(cell.c_str(), &end);
      if (!cell.empty() && *end == '\0') v.push_back(d);
      cell.clear();
    } else {
      cell += c;
    }
  }
  return v;
}

}  // namespace

TEST(Cli, OverheadSackIs138) {
  auto r = run({"overhead", "--protocol", "esp-tunnel", "--cipher", "aes256-cbc", "--frame-len",
                "62", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ct_frame_len"], 138);
  EXPECT_EQ(j["cipher"], "aes256-cbc");
}

TEST(Cli, OverheadCsvMatchesLibrary) {
  auto r = run({"overhead", "--protocol", "macsec", "--frame-len", "1500", "-o", "csv"});
  ASSERT_EQ(r.code, 0);
  SecurityConfig cfg;
  cfg.protocol = Protocol::Macsec;
  std::ostringstream lib;
  report::write_csv(lib, secure_frame(1500, cfg));
  EXPECT_EQ(r.out, lib.str());
}

TEST(Cli, DelayJsonAndCsvAgree) {
  std::vector<std::string> base{"delay", "--frame-len", "62", "--protocol", "esp-tunnel",
                                "--profile", "e2-aes256cbc", "--distance", "10"};
  auto j = base, c = base;
  j.insert(j.begin(), {"-o", "json"});
  c.insert(c.begin(), {"-o", "csv"});
  auto rj = run(j), rc = run(c);
  ASSERT_EQ(rj.code, 0);
  ASSERT_EQ(rc.code, 0);
  const auto json = nlohmann::json::parse(rj.out);
  const auto cells = numbers(rc.out);
  ASSERT_EQ(cells.size(), 5u);
  EXPECT_EQ(cells[0], json["queuing_us"].get<double>());
  EXPECT_EQ(cells[1], json["propagation_us"].get<double>());
  EXPECT_EQ(cells[2], json["transmission_us"].get<double>());
  EXPECT_EQ(cells[3], json["processing_us"].get<double>());
  EXPECT_EQ(cells[4], json["total_us"].get<double>());

  LinkSpec link;
  link.length_m = 10;
  const auto lib = total_delay(0, propagation_delay(link), transmission_delay(138, link),
                               e2_aes256cbc_profile().at(62));
  EXPECT_EQ(cells[4], report::r4(lib.total));
}

TEST(Cli, MtuSweepMatchesLibrary) {
  auto r = run({"-o", "csv", "mtu-sweep", "--payload", "8192", "--mtu", "1400:9000:100",
                "--profile", "fh-macsec-enc"});
  ASSERT_EQ(r.code, 0) << r.err;
  SecurityConfig cfg;
  cfg.protocol = Protocol::Macsec;
  std::ostringstream lib;
  report::write_csv(lib, mtu_sweep(8192, cfg, fh_macsec_profile(true), LinkSpec{}, 1400, 9000, 100));
  EXPECT_EQ(r.out, lib.str());

  // Minimum-delay row is not MTU 8000.
  std::istringstream rows(r.out);
  std::string line, best_line;
  double best = 1e300;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    const auto v = numbers(line);
    if (v[2] < best) best = v[2], best_line = line;
  }
  EXPECT_NE(best_line.substr(0, 5), "8000,");
}

TEST(Cli, FeasibilityGridCounts) {
  auto r = run({"feasibility"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("macsec-encrypted: 17"), std::string::npos);
  EXPECT_NE(r.out.find("macsec-integrity-only: 12"), std::string::npos);
  EXPECT_NE(r.out.find("no-macsec-only: 73"), std::string::npos);
  EXPECT_NE(r.out.find("infeasible: 66"), std::string::npos);

  auto csv = run({"-o", "csv", "feasibility", "--baseline", "118"});
  std::ostringstream lib;
  report::write_regions_csv(lib, LatencyBudgetTable::wg4(),
                            classify_table(LatencyBudgetTable::wg4()));
  EXPECT_EQ(csv.out, lib.str());
}

TEST(Cli, GoldenFiles) {
  const std::pair<std::vector<std::string>, const char*> cases[] = {
      {{"overhead", "--protocol", "esp-tunnel", "--cipher", "aes256-cbc", "--frame-len", "62"},
       "overhead_sack.txt"},
      {{"-o", "json", "overhead", "--protocol", "esp-tunnel", "--cipher", "aes256-gcm",
        "--frame-len", "62"},
       "overhead_sack_gcm.json"},
      {{"feasibility"}, "feasibility_grid.txt"},
      {{"-o", "csv", "queuing", "--load", "5e9"}, "queuing.csv"},
      {{"-o", "json", "throughput", "--attempted", "2000", "--cipher", "aes128-cbc"},
       "throughput.json"},
      {{"-o", "csv", "rtt", "--frame-len", "62"}, "rtt.csv"},
  };
  for (const auto& [args, file] : cases) {
    auto r = run(args);
    ASSERT_EQ(r.code, 0) << file << ": " << r.err;
    EXPECT_EQ(r.out, slurp(fs::path(SECCOST_GOLDEN_DIR) / file)) << file;
  }
}

TEST(Cli, AnalyzePcap) {
  fixtures::Buf img = fixtures::pcap_header(false, false);
  fixtures::pcap_record(img, 0, 0, fixtures::sctp_frame(62, 3), false);
  fixtures::pcap_record(img, 0, 500, fixtures::sctp_frame(1425, 0), false);
  const auto pcap = temp_path("seccost_cli_test.pcap");
  const auto cdf = temp_path("seccost_cli_test_cdf.csv");
  {
    std::ofstream f(pcap, std::ios::binary);
    f.write(reinterpret_cast<const char*>(img.data()), static_cast<std::streamsize>(img.size()));
  }
  auto r = run({"-o", "json", "analyze", "--pcap", pcap.string(), "--interface", "e2",
                "--protocol", "esp-tunnel", "--cipher", "aes256-cbc", "--cdf", cdf.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["count"], 2);
  EXPECT_EQ(j["projection"]["classes"]["e2-sack"]["ct_bytes"], 138);
  EXPECT_EQ(slurp(cdf), "length,cum_fraction\n62,0.500000\n1425,1.000000\n");
  fs::remove(pcap);
  fs::remove(cdf);
}

TEST(Cli, OutFile) {
  const auto out = temp_path("seccost_cli_out.json");
  auto r = run({"--out", out.string(), "-o", "json", "overhead", "--protocol", "macsec",
                "--frame-len", "100"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(nlohmann::json::parse(slurp(out))["ct_frame_len"], 132);
  fs::remove(out);
}

TEST(Cli, ConfigFromEnvironment) {
  const auto conf = temp_path("seccost_cli.conf");
  {
    std::ofstream f(conf);
    f << "[profile]\nname = flat\nanchors = [[0, 5], [9000, 5]]\n";
  }
  ::setenv("SECCOST_CONFIG", conf.c_str(), 1);
  auto r = run({"-o", "json", "delay", "--frame-len", "100", "--profile", "flat"});
  ::unsetenv("SECCOST_CONFIG");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["processing_us"], 5.0);
  fs::remove(conf);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  auto unknown = run({"overhead", "--frame-len", "62", "--bogus"});
  EXPECT_EQ(unknown.code, cli::kExitUsage);
  EXPECT_NE(unknown.err.find("--bogus"), std::string::npos);
  auto badproto = run({"overhead", "--protocol", "wep", "--frame-len", "62"});
  EXPECT_EQ(badproto.code, cli::kExitUsage);
  EXPECT_NE(badproto.err.find("--protocol"), std::string::npos);
  auto badmtu = run({"mtu-sweep", "--mtu", "9000:1400:100"});
  EXPECT_EQ(badmtu.code, cli::kExitUsage);
  EXPECT_NE(badmtu.err.find("--mtu"), std::string::npos);
  EXPECT_EQ(run({"-o", "xml", "feasibility"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"overhead", "feasibility"}).code, cli::kExitUsage);

  auto nocap = run({"throughput", "--attempted", "10", "--cipher", "aes128-gcm"});
  EXPECT_EQ(nocap.code, cli::kExitData);
  EXPECT_NE(nocap.err.find("aes128-gcm"), std::string::npos);
  EXPECT_EQ(run({"overhead", "--protocol", "esp-tunnel", "--frame-len", "10"}).code,
            cli::kExitData);
  EXPECT_EQ(run({"queuing", "--load", "2e10"}).code, cli::kExitData);
  EXPECT_EQ(run({"analyze", "--pcap", "/nonexistent.pcap"}).code, cli::kExitData);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}
