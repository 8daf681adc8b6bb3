#include "seccost/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "seccost/error.hpp"

namespace seccost {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell.erase(0, cell.find_first_not_of(" \t\r"));
    cell.erase(cell.find_last_not_of(" \t\r") + 1);
    out.push_back(cell);
  }
  return out;
}

}  // namespace

LatencyBudgetTable::LatencyBudgetTable(std::vector<std::string> ru_categories,
                                       std::vector<std::string> du_categories,
                                       std::vector<std::vector<Micros>> budget)
    : ru_(std::move(ru_categories)), du_(std::move(du_categories)), budget_(std::move(budget)) {
  if (ru_.empty() || du_.empty()) throw InvalidConfig("budget table needs rows and columns");
  if (budget_.size() != ru_.size()) throw InvalidConfig("budget table row count mismatch");
  for (std::size_t r = 0; r < budget_.size(); ++r) {
    if (budget_[r].size() != du_.size()) {
      throw InvalidConfig("budget table row " + ru_[r] + " has the wrong width");
    }
    for (std::size_t c = 0; c < du_.size(); ++c) {
      const Micros v = budget_[r][c];
      if (!(v >= 0)) throw InvalidConfig("budget table entries must be non-negative");
      if (c > 0 && v > budget_[r][c - 1]) {
        throw InvalidConfig("budget increases along row " + ru_[r]);
      }
      if (r > 0 && v > budget_[r - 1][c]) {
        throw InvalidConfig("budget increases down column " + du_[c]);
      }
    }
  }
}

const LatencyBudgetTable& LatencyBudgetTable::wg4() {
  static const LatencyBudgetTable table(
      {"O", "P", "Q", "R", "S", "T", "U", "V", "W", "X", "Y", "Z"},
      {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L", "M", "N"},
      {
          {3000, 399, 379, 359, 339, 319, 299, 279, 259, 239, 219, 199, 179, 159},
          {2949, 348, 328, 308, 288, 268, 248, 228, 208, 188, 168, 148, 128, 108},
          {2929, 328, 308, 288, 268, 248, 228, 208, 188, 168, 148, 128, 108, 88},
          {2909, 308, 288, 268, 248, 228, 208, 188, 168, 148, 128, 108, 88, 68},
          {2889, 288, 268, 248, 228, 208, 188, 168, 148, 128, 108, 88, 68, 48},
          {2869, 268, 248, 228, 208, 188, 168, 148, 128, 108, 88, 68, 48, 28},
          {2849, 248, 228, 208, 188, 168, 148, 128, 108, 88, 68, 48, 28, 8},
          {2829, 228, 208, 188, 168, 148, 128, 108, 88, 68, 48, 28, 8, 0},
          {2809, 208, 188, 168, 148, 128, 108, 88, 68, 48, 28, 8, 0, 0},
          {2789, 188, 168, 148, 128, 108, 88, 68, 48, 28, 8, 0, 0, 0},
          {2769, 168, 148, 128, 108, 88, 68, 48, 28, 8, 0, 0, 0, 0},
          {2749, 148, 128, 108, 88, 68, 48, 28, 8, 0, 0, 0, 0, 0},
      });
  return table;
}

LatencyBudgetTable LatencyBudgetTable::from_csv(std::istream& in) {
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    header = split_csv_line(line);
    break;
  }
  if (header.size() < 2) throw InvalidConfig("budget CSV needs a header row");
  std::vector<std::string> du(header.begin() + 1, header.end());
  std::vector<std::string> ru;
  std::vector<std::vector<Micros>> budget;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw InvalidConfig("budget CSV row '" + line + "' has the wrong width");
    }
    ru.push_back(cells[0]);
    std::vector<Micros> row;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      try {
        row.push_back(std::stod(cells[i]));
      } catch (const std::exception&) {
        throw InvalidConfig("budget CSV value '" + cells[i] + "' is not a number");
      }
    }
    budget.push_back(std::move(row));
  }
  return LatencyBudgetTable(std::move(ru), std::move(du), std::move(budget));
}

void LatencyBudgetTable::write_csv(std::ostream& out) const {
  out << "ru";
  for (const auto& d : du_) out << ',' << d;
  out << '\n';
  for (std::size_t r = 0; r < rows(); ++r) {
    out << ru_[r];
    for (std::size_t c = 0; c < cols(); ++c) out << ',' << budget_[r][c];
    out << '\n';
  }
}

void SecurityDelayAssumptions::validate() const {
  if (!(delta_macsec >= 0 && delta_macsec <= delta_macsec_enc)) {
    throw InvalidConfig("MACsec deltas must satisfy 0 <= delta_macsec <= delta_macsec_enc");
  }
  if (!std::isfinite(baseline_oneway)) throw InvalidConfig("baseline must be finite");
}

std::string_view region_name(Region r) {
  switch (r) {
    case Region::FeasibleWithEncryption:
      return "macsec-encrypted";
    case Region::FeasibleWithoutEncryptionOnly:
      return "macsec-integrity-only";
    case Region::FeasibleWithoutMacsecOnly:
      return "no-macsec-only";
    case Region::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

char region_letter(Region r) {
  switch (r) {
    case Region::FeasibleWithEncryption:
      return 'E';
    case Region::FeasibleWithoutEncryptionOnly:
      return 'N';
    case Region::FeasibleWithoutMacsecOnly:
      return 'P';
    case Region::Infeasible:
      return 'X';
  }
  return '?';
}

int region_strength(Region r) { return 3 - static_cast<int>(r); }

Region classify_cell(Micros budget, const SecurityDelayAssumptions& a) {
  a.validate();
  if (budget >= a.baseline_oneway + a.delta_macsec_enc) return Region::FeasibleWithEncryption;
  if (budget >= a.baseline_oneway + a.delta_macsec) return Region::FeasibleWithoutEncryptionOnly;
  if (budget >= a.baseline_oneway) return Region::FeasibleWithoutMacsecOnly;
  return Region::Infeasible;
}

ClassifiedTable classify_table(const LatencyBudgetTable& t, const SecurityDelayAssumptions& a) {
  ClassifiedTable out;
  out.regions.assign(t.rows(), std::vector<Region>(t.cols(), Region::Infeasible));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const Region reg = classify_cell(t.at(r, c), a);
      out.regions[r][c] = reg;
      ++out.counts[static_cast<std::size_t>(reg)];
    }
  }
  return out;
}

BaselineInterval baseline_interval_from_coloring(const LatencyBudgetTable& t,
                                                 const std::vector<std::vector<Region>>& coloring,
                                                 const SecurityDelayAssumptions& deltas) {
  deltas.validate();
  if (coloring.size() != t.rows()) throw InvalidConfig("coloring row count mismatch");
  constexpr Micros inf = std::numeric_limits<Micros>::infinity();
  BaselineInterval iv{-inf, inf};
  // Region thresholds: budget >= base + d is feasible, so a feasible cell
  // bounds base from above (base <= budget - d) and an infeasible one from
  // below (base > budget - d).
  auto at_most = [&](Micros v) { iv.high = std::min(iv.high, v); };
  auto above = [&](Micros v) { iv.low = std::max(iv.low, v); };
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (coloring[r].size() != t.cols()) throw InvalidConfig("coloring row width mismatch");
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const Micros b = t.at(r, c);
      switch (coloring[r][c]) {
        case Region::FeasibleWithEncryption:
          at_most(b - deltas.delta_macsec_enc);
          break;
        case Region::FeasibleWithoutEncryptionOnly:
          at_most(b - deltas.delta_macsec);
          above(b - deltas.delta_macsec_enc);
          break;
        case Region::FeasibleWithoutMacsecOnly:
          at_most(b);
          above(b - deltas.delta_macsec);
          break;
        case Region::Infeasible:
          above(b);
          break;
      }
    }
  }
  if (!(iv.low < iv.high)) {
    std::ostringstream msg;
    msg << "no baseline reproduces the coloring (needs " << iv.low << " < b <= " << iv.high << ")";
    throw InconsistentColoring(msg.str());
  }
  return iv;
}

}  // namespace seccost
