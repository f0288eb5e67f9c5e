#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rfs/vecfit.hpp"

namespace rfs::vecfit {

// Single-frequency simulator: returns the ports x ports S-matrix (row-major)
// at f_hz.  May throw; classic_afs then aborts with a partial result.
using PointOracle = std::function<std::vector<Complex>(double f_hz)>;

struct ClassicAfsConfig {
  std::vector<std::size_t> orders;  // ensemble model orders, >= 2 entries
  FitConfig base;                   // iterations / tolerance shared by members
  std::size_t budget = 30;          // total simulated points, incl. the seed
};

struct ClassicAfsResult {
  std::vector<std::size_t> selected_indices;    // chronological, into band grid
  std::vector<double> selected_frequencies_hz;  // same order
  RationalModel model;                          // best-order fit on final set
  std::size_t best_order = 0;
  bool completed = true;   // false: oracle failed, result is partial
  std::string failure;
  std::size_t fit_calls = 0;
  std::size_t refinement_steps = 0;
};

// Classic ensemble-driven adaptive frequency sampling: seed with
// 2*max(order)+2 evenly spread band-grid points, then repeatedly fit the
// ensemble, locate the highest-uncertainty unsampled frequency (ties break
// toward the lower frequency), and simulate it, until the budget is spent.
ClassicAfsResult classic_afs(const PointOracle& oracle, std::size_t ports,
                             const FrequencyGrid& band,
                             const ClassicAfsConfig& config);

}  // namespace rfs::vecfit
