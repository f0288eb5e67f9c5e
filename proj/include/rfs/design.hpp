#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rfs {

// One geometric parameter axis: uniformly stepped closed interval.
struct Axis {
  std::string name;
  std::string unit;  // informational, e.g. "mm", "um"
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;
};

struct DesignPoint {
  std::vector<double> values;  // ordered per the owning space's axes

  bool operator==(const DesignPoint& other) const = default;
};

// Cartesian lattice over the axes.  Enumeration is row-major in axis
// declaration order (axis 0 slowest), a stable bijection onto [0, size()).
class DesignSpace {
 public:
  explicit DesignSpace(std::vector<Axis> axes);

  const std::vector<Axis>& axes() const { return axes_; }
  std::size_t dims() const { return axes_.size(); }

  std::size_t axis_count(std::size_t axis) const { return counts_[axis]; }
  std::size_t size() const { return total_; }

  DesignPoint point_at(std::size_t index) const;
  std::size_t index_of(const DesignPoint& point) const;

  // True when every coordinate is inside its axis range (lattice or not).
  bool contains(const DesignPoint& point) const;
  // Like contains, plus each coordinate on the step lattice within 1e-9*step.
  bool on_lattice(const DesignPoint& point) const;

 private:
  std::vector<Axis> axes_;
  std::vector<std::size_t> counts_;
  std::size_t total_;
};

}  // namespace rfs
