#include "rfs/response.hpp"

#include <cmath>

#include "rfs/errors.hpp"
#include "rfs/kernels.hpp"

namespace rfs {

double to_db(double magnitude) {
  return 20.0 * std::log10(std::max(magnitude, kDbFloorMagnitude));
}

double from_db(double db) { return std::pow(10.0, db / 20.0); }

ComplexResponse::ComplexResponse(FrequencyGrid grid, std::size_t ports,
                                 std::vector<Complex> data)
    : grid_(std::move(grid)), ports_(ports), data_(std::move(data)) {
  if (ports_ < 1) throw ShapeError("response needs at least one port");
  if (data_.size() != grid_.count() * ports_ * ports_)
    throw ShapeError("response data length does not match grid and ports");
}

ComplexResponse ComplexResponse::zeros(FrequencyGrid grid, std::size_t ports) {
  std::vector<Complex> data(grid.count() * ports * ports, Complex{0.0, 0.0});
  return ComplexResponse(std::move(grid), ports, std::move(data));
}

DbResponse::DbResponse(
    FrequencyGrid grid,
    std::vector<std::pair<std::size_t, std::size_t>> channels,
    std::vector<double> values)
    : grid_(std::move(grid)),
      channels_(std::move(channels)),
      values_(std::move(values)) {
  if (channels_.empty()) throw ShapeError("dB response needs channels");
  if (values_.size() != grid_.count() * channels_.size())
    throw ShapeError("dB value matrix does not match grid and channels");
}

DbResponse DbResponse::from_complex(const ComplexResponse& response) {
  const std::size_t p = response.ports();
  std::vector<std::pair<std::size_t, std::size_t>> channels;
  channels.reserve(p * p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) channels.emplace_back(i, j);

  std::vector<double> values(response.count() * p * p);
  for (std::size_t k = 0; k < response.count(); ++k)
    for (std::size_t c = 0; c < p * p; ++c)
      values[k * p * p + c] = to_db(std::abs(response.matrix_at(k)[c]));
  return DbResponse(response.grid(), std::move(channels), std::move(values));
}

double frobenius_deviation(std::span<const Complex> a,
                           std::span<const Complex> b) {
  if (a.size() != b.size())
    throw ShapeError("frobenius_deviation: dimension mismatch");
  // Interleaved re/im doubles; the squared complex modulus sum is exactly the
  // squared real-element difference sum.
  const auto* pa = reinterpret_cast<const double*>(a.data());
  const auto* pb = reinterpret_cast<const double*>(b.data());
  return std::sqrt(kernels::reduce_sumsq_diff(pa, pb, 2 * a.size()));
}

}  // namespace rfs
