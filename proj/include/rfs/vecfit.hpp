#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rfs/response.hpp"

namespace rfs::vecfit {

// Rational macromodel  h(s) = d + s*e + sum_n r_n / (s - p_n)  with s = j*2*pi*f.
// Real-coefficient model: non-real poles and their residue matrices occur in
// exact conjugate pairs (stored adjacently, Im > 0 first); d and e are real.
struct RationalModel {
  std::size_t ports = 1;
  std::vector<Complex> poles;
  std::vector<std::vector<Complex>> residues;  // residues[n]: ports*ports row-major
  std::vector<double> offset;                  // d, ports*ports row-major
  std::vector<double> linear;                  // e, ports*ports row-major
  bool include_linear = false;

  std::size_t order() const { return poles.size(); }

  // Checks conjugate-pair closure, stability, and shape consistency; throws.
  void validate() const;

  // Structured text, 17 significant digits; round-trip is value-exact.
  std::string serialize() const;
  static RationalModel deserialize(const std::string& text);
};

enum class InitialPoles { linear_spaced, log_spaced };

struct FitConfig {
  std::size_t order = 6;
  std::size_t iterations = 20;
  double pole_tolerance = 1e-8;  // relative pole movement for convergence
  InitialPoles initial_poles = InitialPoles::linear_spaced;
  bool include_linear = false;
};

struct FitInfo {
  bool converged = false;
  std::size_t iterations_used = 0;
  double final_pole_movement = 0.0;
  double rms_residual = 0.0;  // RMS |h_fit - h| over samples and elements
};

struct FitResult {
  RationalModel model;
  FitInfo info;
};

// Pointwise model evaluation at s = j*2*pi*f.  Throws NumericalError when a
// pole sits on the evaluation axis (|s - p| < 1e-30).
ComplexResponse evaluate(const RationalModel& model, const FrequencyGrid& grid);
std::vector<Complex> evaluate_point(const RationalModel& model, Complex s);

// Iterative least-squares fit with pole relocation (the relocation step takes
// the new poles as eigenvalues of A - b*c^T built from the scaling-function
// coefficients).  Requires grid count >= 2*order + 2 and finite samples.
FitResult fit(const ComplexResponse& samples, const FitConfig& config);

struct EnsembleUncertainty {
  std::vector<double> per_frequency;  // on the dense grid: max pairwise
                                      // Frobenius deviation at each frequency
  double band_rmsd = 0.0;             // max pairwise sqrt(mean_f ||.||_F^2)
  std::vector<FitResult> members;     // one per order, matching input order
};

// Fits one model per order on the samples and measures their disagreement on
// dense_grid.  Requires >= 2 orders; a failing member fit is reported with
// the offending order in the error message.
EnsembleUncertainty ensemble_uncertainty(const ComplexResponse& samples,
                                         const std::vector<std::size_t>& orders,
                                         const FrequencyGrid& dense_grid,
                                         const FitConfig& base_config = {});

}  // namespace rfs::vecfit
