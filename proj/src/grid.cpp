#include "rfs/grid.hpp"

#include "rfs/errors.hpp"

namespace rfs {

FrequencyGrid::FrequencyGrid(std::vector<double> points_hz)
    : points_(std::move(points_hz)) {
  if (points_.empty()) throw ShapeError("frequency grid must not be empty");
  if (points_.front() <= 0.0)
    throw ShapeError("frequency grid points must be > 0");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i] <= points_[i - 1])
      throw ShapeError("frequency grid must be strictly increasing");
  }
}

FrequencyGrid FrequencyGrid::linspace(double f_min_hz, double f_max_hz,
                                      std::size_t count) {
  if (count < 2) throw ShapeError("linspace needs at least 2 points");
  std::vector<double> pts(count);
  const double step = (f_max_hz - f_min_hz) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    pts[i] = f_min_hz + step * static_cast<double>(i);
  pts.back() = f_max_hz;
  return FrequencyGrid(std::move(pts));
}

FrequencyGrid FrequencyGrid::subset(
    const std::vector<std::size_t>& indices) const {
  std::vector<double> pts;
  pts.reserve(indices.size());
  for (std::size_t idx : indices) {
    if (idx >= points_.size()) throw ShapeError("subset index out of range");
    pts.push_back(points_[idx]);
  }
  return FrequencyGrid(std::move(pts));
}

}  // namespace rfs
