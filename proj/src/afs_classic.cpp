#include "rfs/afs_classic.hpp"

#include <algorithm>
#include <cmath>

#include "rfs/errors.hpp"

namespace rfs::vecfit {

namespace {

std::vector<std::size_t> spread_indices(std::size_t count, std::size_t n) {
  std::vector<std::size_t> idx(n);
  if (n == 1) {
    idx[0] = 0;
    return idx;
  }
  for (std::size_t i = 0; i < n; ++i)
    idx[i] = static_cast<std::size_t>(std::llround(
        static_cast<double>(i) * static_cast<double>(count - 1) /
        static_cast<double>(n - 1)));
  return idx;
}

ComplexResponse gather(const FrequencyGrid& band, std::size_t ports,
                       const std::vector<std::vector<Complex>>& cache,
                       const std::vector<bool>& have) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < have.size(); ++i)
    if (have[i]) indices.push_back(i);
  std::vector<Complex> data;
  data.reserve(indices.size() * ports * ports);
  for (std::size_t i : indices)
    data.insert(data.end(), cache[i].begin(), cache[i].end());
  return ComplexResponse(band.subset(indices), ports, std::move(data));
}

}  // namespace

ClassicAfsResult classic_afs(const PointOracle& oracle, std::size_t ports,
                             const FrequencyGrid& band,
                             const ClassicAfsConfig& config) {
  if (config.orders.size() < 2)
    throw ShapeError("classic_afs needs >= 2 ensemble orders");
  const std::size_t max_order =
      *std::max_element(config.orders.begin(), config.orders.end());
  const std::size_t seed_count = 2 * max_order + 2;
  if (config.budget < seed_count)
    throw ShapeError("classic_afs budget below seed count 2*max(order)+2");
  if (config.budget > band.count())
    throw ShapeError("classic_afs budget exceeds band grid size");

  ClassicAfsResult result;
  std::vector<std::vector<Complex>> cache(band.count());
  std::vector<bool> have(band.count(), false);

  auto simulate = [&](std::size_t idx) {
    cache[idx] = oracle(band[idx]);
    if (cache[idx].size() != ports * ports)
      throw ShapeError("oracle returned wrong matrix size");
    have[idx] = true;
    result.selected_indices.push_back(idx);
    result.selected_frequencies_hz.push_back(band[idx]);
  };

  for (std::size_t idx : spread_indices(band.count(), seed_count)) {
    try {
      simulate(idx);
    } catch (const std::exception& e) {
      result.completed = false;
      result.failure = e.what();
      return result;
    }
  }

  std::size_t n_selected = seed_count;
  while (n_selected < config.budget) {
    const auto samples = gather(band, ports, cache, have);
    const auto unc = ensemble_uncertainty(samples, config.orders, band, config.base);
    result.fit_calls += config.orders.size();

    std::size_t best = band.count();
    double best_u = -1.0;
    for (std::size_t i = 0; i < band.count(); ++i) {
      if (have[i]) continue;
      if (unc.per_frequency[i] > best_u) {
        best_u = unc.per_frequency[i];
        best = i;
      }
    }
    try {
      simulate(best);
    } catch (const std::exception& e) {
      result.completed = false;
      result.failure = e.what();
      break;
    }
    ++n_selected;
    ++result.refinement_steps;
  }

  // Final ensemble fit covering the last added point; keep the order with the
  // lowest residual (ties toward the lower order).
  try {
    const auto samples = gather(band, ports, cache, have);
    const auto unc =
        ensemble_uncertainty(samples, config.orders, band, config.base);
    result.fit_calls += config.orders.size();
    std::size_t best_member = 0;
    for (std::size_t m = 1; m < config.orders.size(); ++m)
      if (unc.members[m].info.rms_residual <
          unc.members[best_member].info.rms_residual)
        best_member = m;
    result.model = unc.members[best_member].model;
    result.best_order = config.orders[best_member];
  } catch (const std::exception& e) {
    if (result.completed) throw;
    result.failure += "; final fit unavailable: ";
    result.failure += e.what();
  }
  return result;
}

}  // namespace rfs::vecfit
