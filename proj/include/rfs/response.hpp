#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rfs/grid.hpp"

namespace rfs {

using Complex = std::complex<double>;

// |S| values below this are clamped before the dB conversion so transmission
// zeros stay finite.
inline constexpr double kDbFloorMagnitude = 1e-12;

double to_db(double magnitude);
double from_db(double db);

// Multiport complex S-matrix sampled on a frequency grid.  Matrices are
// stored row-major per grid point.
class ComplexResponse {
 public:
  ComplexResponse(FrequencyGrid grid, std::size_t ports,
                  std::vector<Complex> data);

  static ComplexResponse zeros(FrequencyGrid grid, std::size_t ports);

  const FrequencyGrid& grid() const { return grid_; }
  std::size_t ports() const { return ports_; }
  std::size_t count() const { return grid_.count(); }

  Complex at(std::size_t point, std::size_t row, std::size_t col) const {
    return data_[(point * ports_ + row) * ports_ + col];
  }
  void set(std::size_t point, std::size_t row, std::size_t col, Complex v) {
    data_[(point * ports_ + row) * ports_ + col] = v;
  }

  std::span<const Complex> matrix_at(std::size_t point) const {
    return {data_.data() + point * ports_ * ports_, ports_ * ports_};
  }
  const std::vector<Complex>& data() const { return data_; }

  bool operator==(const ComplexResponse& other) const = default;

 private:
  FrequencyGrid grid_;
  std::size_t ports_;
  std::vector<Complex> data_;
};

// Per-port-pair |S| in dB on a frequency grid.  Channels are every ordered
// port pair (row-major), including reciprocal duplicates.
class DbResponse {
 public:
  DbResponse(FrequencyGrid grid,
             std::vector<std::pair<std::size_t, std::size_t>> channels,
             std::vector<double> values);

  static DbResponse from_complex(const ComplexResponse& response);

  const FrequencyGrid& grid() const { return grid_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& channels() const {
    return channels_;
  }
  std::size_t channel_count() const { return channels_.size(); }

  double at(std::size_t point, std::size_t channel) const {
    return values_[point * channels_.size() + channel];
  }
  std::span<const double> row(std::size_t point) const {
    return {values_.data() + point * channels_.size(), channels_.size()};
  }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const DbResponse& other) const = default;

 private:
  FrequencyGrid grid_;
  std::vector<std::pair<std::size_t, std::size_t>> channels_;
  std::vector<double> values_;
};

// Frobenius distance sqrt(sum |a_ij - b_ij|^2) between equal-shape complex
// matrices (or any equal-length complex spans).
double frobenius_deviation(std::span<const Complex> a,
                           std::span<const Complex> b);

}  // namespace rfs
