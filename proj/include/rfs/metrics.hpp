#pragma once

#include <optional>
#include <string>

#include "rfs/response.hpp"

namespace rfs {

// Pooled error metrics over every (grid point, channel) cell.
//
// mae/mse/rmse are symmetric under argument swap; r_squared and psnr are not
// (both are anchored on the reference: SS_tot about the reference mean, PSNR
// peak = max|reference|).
struct MetricReport {
  double mae = 0.0;
  double mse = 0.0;
  double rmse = 0.0;
  double psnr = 0.0;  // +inf sentinel when rmse == 0

  // Undefined (nullopt) when the reference is constant (SS_tot == 0).
  std::optional<double> r_squared_opt;

  double r_squared() const;  // throws NumericalError when undefined

  // CSV: header "metric,value", one row per metric, 12 significant digits.
  // An undefined r_squared is written as "nan".
  std::string to_csv() const;
};

MetricReport metrics(const DbResponse& reference, const DbResponse& estimate);

}  // namespace rfs
