#include "rfs/design.hpp"

#include <cmath>

#include "rfs/errors.hpp"

namespace rfs {

DesignSpace::DesignSpace(std::vector<Axis> axes) : axes_(std::move(axes)) {
  counts_.reserve(axes_.size());
  total_ = 1;
  for (const Axis& ax : axes_) {
    if (!(ax.step > 0.0) || !(ax.max >= ax.min))
      throw ConfigError("axis '" + ax.name + "' has invalid range or step");
    const double ratio = (ax.max - ax.min) / ax.step;
    const double rounded = std::round(ratio);
    if (std::fabs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
      throw ConfigError("axis '" + ax.name +
                        "': (max - min)/step is not integral");
    counts_.push_back(static_cast<std::size_t>(rounded) + 1);
    total_ *= counts_.back();
  }
}

DesignPoint DesignSpace::point_at(std::size_t index) const {
  if (index >= total_) throw ShapeError("design index out of range");
  DesignPoint p;
  p.values.resize(axes_.size());
  for (std::size_t a = axes_.size(); a-- > 0;) {
    const std::size_t i = index % counts_[a];
    index /= counts_[a];
    p.values[a] = axes_[a].min + static_cast<double>(i) * axes_[a].step;
  }
  return p;
}

std::size_t DesignSpace::index_of(const DesignPoint& point) const {
  if (point.values.size() != axes_.size())
    throw ShapeError("design point dimension mismatch");
  std::size_t index = 0;
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    const double off = (point.values[a] - axes_[a].min) / axes_[a].step;
    const double rounded = std::round(off);
    if (std::fabs(off - rounded) > 1e-6 || rounded < 0.0 ||
        static_cast<std::size_t>(rounded) >= counts_[a])
      throw ShapeError("design point not on lattice of axis '" +
                       axes_[a].name + "'");
    index = index * counts_[a] + static_cast<std::size_t>(rounded);
  }
  return index;
}

bool DesignSpace::contains(const DesignPoint& point) const {
  if (point.values.size() != axes_.size()) return false;
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    const double tol = 1e-9 * axes_[a].step;
    if (point.values[a] < axes_[a].min - tol ||
        point.values[a] > axes_[a].max + tol)
      return false;
  }
  return true;
}

bool DesignSpace::on_lattice(const DesignPoint& point) const {
  if (!contains(point)) return false;
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    const double off = (point.values[a] - axes_[a].min) / axes_[a].step;
    if (std::fabs(off - std::round(off)) > 1e-9) return false;
  }
  return true;
}

}  // namespace rfs
