#pragma once

#include <cstddef>
#include <vector>

namespace rfs {

// Ordered real frequency axis in Hz.  Strictly increasing, all points > 0.
// Single-point grids are allowed so adaptive samplers can query the oracle
// one frequency at a time; operations that need more points (fitting,
// trapezoidal masses) check their own minimum counts.
class FrequencyGrid {
 public:
  explicit FrequencyGrid(std::vector<double> points_hz);

  static FrequencyGrid linspace(double f_min_hz, double f_max_hz,
                                std::size_t count);

  const std::vector<double>& points() const { return points_; }
  double operator[](std::size_t i) const { return points_[i]; }
  std::size_t count() const { return points_.size(); }
  double min_hz() const { return points_.front(); }
  double max_hz() const { return points_.back(); }

  // Grid made of the given subset of this grid's points (indices strictly
  // increasing).
  FrequencyGrid subset(const std::vector<std::size_t>& indices) const;

  bool operator==(const FrequencyGrid& other) const = default;

 private:
  std::vector<double> points_;
};

}  // namespace rfs
