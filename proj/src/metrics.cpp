#include "rfs/metrics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rfs/csv.hpp"
#include "rfs/errors.hpp"
#include "rfs/kernels.hpp"

namespace rfs {

double MetricReport::r_squared() const {
  if (!r_squared_opt)
    throw NumericalError("r_squared undefined: constant reference (SS_tot = 0)");
  return *r_squared_opt;
}

std::string MetricReport::to_csv() const {
  std::ostringstream out;
  out << "metric,value\n";
  out << "mae," << format_g12(mae) << "\n";
  out << "mse," << format_g12(mse) << "\n";
  out << "rmse," << format_g12(rmse) << "\n";
  out << "r_squared,"
      << (r_squared_opt ? format_g12(*r_squared_opt) : std::string("nan"))
      << "\n";
  out << "psnr," << format_g12(psnr) << "\n";
  return out.str();
}

MetricReport metrics(const DbResponse& reference, const DbResponse& estimate) {
  if (!(reference.grid() == estimate.grid()))
    throw ShapeError("metrics: frequency grids differ");
  if (reference.channels() != estimate.channels())
    throw ShapeError("metrics: channel lists differ");

  const std::size_t n = reference.values().size();
  const double* ref = reference.values().data();
  const double* est = estimate.values().data();
  const double inv_n = 1.0 / static_cast<double>(n);

  MetricReport report;
  report.mae = kernels::reduce_abs_diff(ref, est, n) * inv_n;
  report.mse = kernels::reduce_sumsq_diff(ref, est, n) * inv_n;
  report.rmse = std::sqrt(report.mse);

  const double ss_res = kernels::reduce_sumsq_diff(ref, est, n);
  const double ref_mean = kernels::reduce_sum(ref, n) * inv_n;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = ref[i] - ref_mean;
    ss_tot += d * d;
  }
  if (ss_tot > 0.0) report.r_squared_opt = 1.0 - ss_res / ss_tot;

  const double peak = kernels::reduce_max_abs(ref, n);
  report.psnr = report.rmse == 0.0
                    ? std::numeric_limits<double>::infinity()
                    : 20.0 * std::log10(peak / report.rmse);
  return report;
}

}  // namespace rfs
