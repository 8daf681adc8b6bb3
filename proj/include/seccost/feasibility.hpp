#pragma once

// WG4 fronthaul latency budgets and which O-RU/O-DU category pairs can
// afford MACsec on a given system.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "seccost/delaymodel.hpp"

namespace seccost {

/// Matrix of maximum one-way fronthaul delays (us), rows = O-RU categories,
/// columns = O-DU categories. Budgets never grow moving right or down.
class LatencyBudgetTable {
 public:
  LatencyBudgetTable(std::vector<std::string> ru_categories,
                     std::vector<std::string> du_categories,
                     std::vector<std::vector<Micros>> budget);

  /// The 12 x 14 WG4 table, O-RU O..Z by O-DU A..N.
  static const LatencyBudgetTable& wg4();

  /// CSV with a header row "ru,A,B,..." and one row per O-RU category.
  static LatencyBudgetTable from_csv(std::istream& in);
  void write_csv(std::ostream& out) const;

  std::size_t rows() const { return ru_.size(); }
  std::size_t cols() const { return du_.size(); }
  const std::vector<std::string>& ru_categories() const { return ru_; }
  const std::vector<std::string>& du_categories() const { return du_; }
  Micros at(std::size_t row, std::size_t col) const { return budget_[row][col]; }

 private:
  std::vector<std::string> ru_;
  std::vector<std::string> du_;
  std::vector<std::vector<Micros>> budget_;
};

struct SecurityDelayAssumptions {
  Micros baseline_oneway = 118.0;
  Micros delta_macsec = 153.0;
  Micros delta_macsec_enc = 218.0;

  void validate() const;
};

/// Strongest first.
enum class Region {
  FeasibleWithEncryption,
  FeasibleWithoutEncryptionOnly,
  FeasibleWithoutMacsecOnly,
  Infeasible,
};

inline constexpr std::size_t kRegionCount = 4;

std::string_view region_name(Region r);
/// One-letter tag used in grids: E, N, P, X.
char region_letter(Region r);
/// Higher is stronger.
int region_strength(Region r);

Region classify_cell(Micros budget, const SecurityDelayAssumptions& a = {});

struct ClassifiedTable {
  std::vector<std::vector<Region>> regions;
  std::array<std::size_t, kRegionCount> counts{};

  std::size_t count(Region r) const { return counts[static_cast<std::size_t>(r)]; }
};

ClassifiedTable classify_table(const LatencyBudgetTable& t, const SecurityDelayAssumptions& a = {});

/// Baselines b with low < b <= high reproduce the coloring. Either bound may
/// be infinite.
struct BaselineInterval {
  Micros low;
  Micros high;
};

/// Inverse of classify_table: every baseline one-way delay that reproduces
/// `coloring` for the given deltas (baseline_oneway in `deltas` is ignored).
/// Throws InconsistentColoring when no baseline does.
BaselineInterval baseline_interval_from_coloring(const LatencyBudgetTable& t,
                                                 const std::vector<std::vector<Region>>& coloring,
                                                 const SecurityDelayAssumptions& deltas);

}  // namespace seccost
