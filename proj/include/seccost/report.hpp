#pragma once

// JSON and CSV renderings of the analysis results. Microsecond values are
// rounded to four fractional digits so every output format carries the same
// numbers.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "seccost/delaymodel.hpp"
#include "seccost/feasibility.hpp"
#include "seccost/mtu.hpp"
#include "seccost/overhead.hpp"
#include "seccost/traceio.hpp"

namespace seccost::report {

/// Round to 4 fractional digits.
double r4(double v);
/// r4 then fixed notation with 4 fractional digits.
std::string fixed4(double v);

nlohmann::json to_json(const OverheadBreakdown& b);
/// One row per layer: `layer,bytes`.
void write_csv(std::ostream& out, const OverheadBreakdown& b);

nlohmann::json to_json(const DelayBreakdown& d);
void write_csv_header(std::ostream& out, const DelayBreakdown&);
void write_csv_row(std::ostream& out, const DelayBreakdown& d);

/// `mtu,fragments,total_delay_us,throughput_mbps`
void write_csv(std::ostream& out, const std::vector<MtuSweepRow>& rows);
nlohmann::json to_json(const std::vector<MtuSweepRow>& rows);

/// `ru,du,budget_us,region`, one row per cell.
void write_regions_csv(std::ostream& out, const LatencyBudgetTable& t, const ClassifiedTable& c);
/// Letter grid with a legend and the per-region counts.
void write_regions_grid(std::ostream& out, const LatencyBudgetTable& t, const ClassifiedTable& c);
nlohmann::json to_json(const LatencyBudgetTable& t, const ClassifiedTable& c);

/// `length,cum_fraction`
void write_csv(std::ostream& out, const SizeCdf& cdf);
nlohmann::json to_json(const TraceSummary& s);
nlohmann::json to_json(const ProjectionReport& p);
/// Per-class table: `class,count,pt_mean_len,ct_mean_len,pt_proc_us,ct_proc_us,added_proc_us`.
void write_csv(std::ostream& out, const ProjectionReport& p);

}  // namespace seccost::report
