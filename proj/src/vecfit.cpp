#include "rfs/vecfit.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rfs/csv.hpp"
#include "rfs/errors.hpp"

namespace rfs::vecfit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Pole bookkeeping: canonical lists keep real poles single and complex poles
// as adjacent exact-conjugate pairs, Im > 0 first.
enum class Slot { real, pair_first, pair_second };

std::vector<Slot> classify(const std::vector<Complex>& poles) {
  std::vector<Slot> slots(poles.size());
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (poles[i].imag() == 0.0) {
      slots[i] = Slot::real;
    } else if (poles[i].imag() > 0.0) {
      if (i + 1 >= poles.size() || poles[i + 1] != std::conj(poles[i]))
        throw NumericalError("pole list is not conjugate-paired");
      slots[i] = Slot::pair_first;
      slots[i + 1] = Slot::pair_second;
      ++i;
    } else {
      throw NumericalError("pole list is not conjugate-paired");
    }
  }
  return slots;
}

// Rebuilds a canonical, left-half-plane pole list from raw eigenvalues.
std::vector<Complex> canonicalize(std::vector<Complex> raw) {
  std::vector<double> reals;
  std::vector<Complex> uppers;
  std::vector<Complex> lowers;
  for (Complex p : raw) {
    if (std::fabs(p.imag()) <= 1e-14 * std::max(1.0, std::abs(p)))
      reals.push_back(p.real());
    else if (p.imag() > 0.0)
      uppers.push_back(p);
    else
      lowers.push_back(p);
  }
  // Real-matrix eigenvalues pair up; any unmatched leftovers collapse to real.
  while (uppers.size() > lowers.size()) {
    auto it = std::min_element(uppers.begin(), uppers.end(),
                               [](Complex a, Complex b) { return a.imag() < b.imag(); });
    reals.push_back(it->real());
    uppers.erase(it);
  }
  while (lowers.size() > uppers.size()) {
    auto it = std::max_element(lowers.begin(), lowers.end(),
                               [](Complex a, Complex b) { return a.imag() < b.imag(); });
    reals.push_back(it->real());
    lowers.erase(it);
  }

  auto flip = [](double re) { return re >= 0.0 ? (re == 0.0 ? -1e-12 : -re) : re; };

  std::sort(reals.begin(), reals.end());
  std::sort(uppers.begin(), uppers.end(), [](Complex a, Complex b) {
    return a.imag() != b.imag() ? a.imag() < b.imag() : a.real() < b.real();
  });

  std::vector<Complex> out;
  out.reserve(raw.size());
  for (double re : reals) out.emplace_back(flip(re), 0.0);
  for (Complex p : uppers) {
    const Complex q(flip(p.real()), p.imag());
    out.push_back(q);
    out.push_back(std::conj(q));
  }
  return out;
}

std::vector<Complex> initial_poles(std::size_t order, double w_lo, double w_hi,
                                   InitialPoles strategy) {
  std::vector<Complex> poles;
  poles.reserve(order);
  const std::size_t pairs = order / 2;
  if (order % 2 == 1) poles.emplace_back(-0.5 * (w_lo + w_hi), 0.0);
  for (std::size_t m = 0; m < pairs; ++m) {
    double beta;
    if (pairs == 1) {
      beta = 0.5 * (w_lo + w_hi);
    } else if (strategy == InitialPoles::log_spaced) {
      const double t = static_cast<double>(m) / static_cast<double>(pairs - 1);
      beta = w_lo * std::pow(w_hi / w_lo, t);
    } else {
      const double t = static_cast<double>(m) / static_cast<double>(pairs - 1);
      beta = w_lo + (w_hi - w_lo) * t;
    }
    poles.emplace_back(-beta / 100.0, beta);
    poles.emplace_back(-beta / 100.0, -beta);
  }
  return poles;
}

// Real partial-fraction basis values at one complex frequency.
void basis_row(const std::vector<Complex>& poles, const std::vector<Slot>& slots,
               Complex s, std::vector<Complex>& out) {
  out.resize(poles.size());
  for (std::size_t n = 0; n < poles.size(); ++n) {
    switch (slots[n]) {
      case Slot::real:
        out[n] = 1.0 / (s - poles[n]);
        break;
      case Slot::pair_first: {
        const Complex t1 = 1.0 / (s - poles[n]);
        const Complex t2 = 1.0 / (s - std::conj(poles[n]));
        out[n] = t1 + t2;
        out[n + 1] = Complex(0.0, 1.0) * (t1 - t2);
        ++n;
        break;
      }
      case Slot::pair_second:
        break;  // filled by pair_first
    }
  }
}

double pole_movement(const std::vector<Complex>& before,
                     const std::vector<Complex>& after) {
  double worst = 0.0;
  for (Complex q : after) {
    double best = std::numeric_limits<double>::infinity();
    for (Complex p : before) best = std::min(best, std::abs(q - p));
    double ref = 0.0;
    for (Complex p : before) {
      if (std::abs(q - p) == best) {
        ref = std::abs(p);
        break;
      }
    }
    worst = std::max(worst, ref > 0.0 ? best / ref : best);
  }
  return worst;
}

struct Workspace {
  std::size_t ports = 0;
  std::size_t elements = 0;
  std::size_t count = 0;
  double w_scale = 1.0;                // rad/s per normalized unit
  std::vector<Complex> s;              // normalized j*w
  std::vector<std::vector<Complex>> h; // h[k][e]
};

// Relocation: new poles are the zeros of the scaling function, i.e. the
// eigenvalues of A - b*c^T in the real pair representation.
std::vector<Complex> relocate(const std::vector<Complex>& poles,
                              const std::vector<Slot>& slots,
                              const Eigen::VectorXd& sigma_coeffs) {
  const std::size_t n = poles.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (slots[i]) {
      case Slot::real:
        a(i, i) = poles[i].real();
        b(i) = 1.0;
        break;
      case Slot::pair_first:
        a(i, i) = poles[i].real();
        a(i, i + 1) = poles[i].imag();
        a(i + 1, i) = -poles[i].imag();
        a(i + 1, i + 1) = poles[i].real();
        b(i) = 2.0;
        b(i + 1) = 0.0;
        break;
      case Slot::pair_second:
        break;
    }
  }
  const Eigen::MatrixXd m = a - b * sigma_coeffs.transpose();
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success)
    throw NumericalError("pole relocation eigensolve failed");
  std::vector<Complex> raw(n);
  for (std::size_t i = 0; i < n; ++i) raw[i] = es.eigenvalues()(i);
  return canonicalize(std::move(raw));
}

// Augmented least-squares problem: per-element residues/offset plus the shared
// scaling-function coefficients.  Solved with an SVD so the rank-deficient
// cases (e.g. constant targets, where sigma columns parallel residue columns)
// take the minimum-norm solution instead of failing.
Eigen::VectorXd solve_sigma_stage(const Workspace& ws,
                                  const std::vector<Complex>& poles,
                                  const std::vector<Slot>& slots,
                                  bool include_linear) {
  const std::size_t n = poles.size();
  const std::size_t per_element = n + 1 + (include_linear ? 1 : 0);
  const std::size_t cols = ws.elements * per_element + n;
  const std::size_t rows = 2 * ws.count * ws.elements;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::VectorXd rhs(rows);
  std::vector<Complex> phi;
  for (std::size_t k = 0; k < ws.count; ++k) {
    basis_row(poles, slots, ws.s[k], phi);
    for (std::size_t e = 0; e < ws.elements; ++e) {
      const std::size_t r0 = 2 * (e * ws.count + k);
      const std::size_t off = e * per_element;
      for (std::size_t j = 0; j < n; ++j) {
        a(r0, off + j) = phi[j].real();
        a(r0 + 1, off + j) = phi[j].imag();
      }
      a(r0, off + n) = 1.0;
      if (include_linear) a(r0 + 1, off + n + 1) = ws.s[k].imag();
      const Complex hv = ws.h[k][e];
      const std::size_t soff = ws.elements * per_element;
      for (std::size_t j = 0; j < n; ++j) {
        const Complex v = hv * phi[j];
        a(r0, soff + j) = -v.real();
        a(r0 + 1, soff + j) = -v.imag();
      }
      rhs(r0) = hv.real();
      rhs(r0 + 1) = hv.imag();
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd x = svd.solve(rhs);
  return x.segment(ws.elements * per_element, n);
}

struct ResidueSolution {
  std::vector<std::vector<Complex>> residues;
  std::vector<double> offset;
  std::vector<double> linear;
  double rms_residual = 0.0;
};

ResidueSolution solve_residues(const Workspace& ws,
                               const std::vector<Complex>& poles,
                               const std::vector<Slot>& slots,
                               bool include_linear) {
  const std::size_t n = poles.size();
  const std::size_t cols = n + 1 + (include_linear ? 1 : 0);
  const std::size_t rows = 2 * ws.count;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, cols);
  std::vector<Complex> phi;
  for (std::size_t k = 0; k < ws.count; ++k) {
    basis_row(poles, slots, ws.s[k], phi);
    for (std::size_t j = 0; j < n; ++j) {
      a(2 * k, j) = phi[j].real();
      a(2 * k + 1, j) = phi[j].imag();
    }
    a(2 * k, n) = 1.0;
    if (include_linear) a(2 * k + 1, n + 1) = ws.s[k].imag();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (static_cast<std::size_t>(qr.rank()) < cols) {
    const auto& r = qr.matrixR();
    const double hi = std::fabs(r(0, 0));
    const double lo = std::fabs(r(cols - 1, cols - 1));
    throw ConditioningError("rank-deficient residue system",
                            lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity());
  }

  ResidueSolution sol;
  sol.residues.assign(n, std::vector<Complex>(ws.elements, Complex{}));
  sol.offset.assign(ws.elements, 0.0);
  sol.linear.assign(ws.elements, 0.0);
  double sq = 0.0;
  for (std::size_t e = 0; e < ws.elements; ++e) {
    Eigen::VectorXd rhs(rows);
    for (std::size_t k = 0; k < ws.count; ++k) {
      rhs(2 * k) = ws.h[k][e].real();
      rhs(2 * k + 1) = ws.h[k][e].imag();
    }
    const Eigen::VectorXd x = qr.solve(rhs);
    for (std::size_t j = 0; j < n; ++j) {
      switch (slots[j]) {
        case Slot::real:
          sol.residues[j][e] = Complex(x(j), 0.0);
          break;
        case Slot::pair_first:
          sol.residues[j][e] = Complex(x(j), x(j + 1));
          sol.residues[j + 1][e] = Complex(x(j), -x(j + 1));
          ++j;
          break;
        case Slot::pair_second:
          break;
      }
    }
    sol.offset[e] = x(n);
    if (include_linear) sol.linear[e] = x(n + 1);
    const Eigen::VectorXd res = a * x - rhs;
    sq += res.squaredNorm();
  }
  sol.rms_residual = std::sqrt(sq / static_cast<double>(ws.count * ws.elements));
  return sol;
}

RationalModel assemble_model(const Workspace& ws,
                             const std::vector<Complex>& poles,
                             const ResidueSolution& sol, bool include_linear) {
  RationalModel model;
  model.ports = ws.ports;
  model.include_linear = include_linear;
  model.poles.resize(poles.size());
  model.residues.resize(poles.size());
  for (std::size_t j = 0; j < poles.size(); ++j) {
    model.poles[j] = poles[j] * ws.w_scale;
    model.residues[j].resize(ws.elements);
    for (std::size_t e = 0; e < ws.elements; ++e)
      model.residues[j][e] = sol.residues[j][e] * ws.w_scale;
  }
  model.offset = sol.offset;
  model.linear.assign(ws.elements, 0.0);
  if (include_linear)
    for (std::size_t e = 0; e < ws.elements; ++e)
      model.linear[e] = sol.linear[e] / ws.w_scale;
  return model;
}

}  // namespace

void RationalModel::validate() const {
  const std::size_t e = ports * ports;
  if (ports < 1) throw ShapeError("model needs ports >= 1");
  if (residues.size() != poles.size())
    throw ShapeError("model residue count != pole count");
  if (offset.size() != e || linear.size() != e)
    throw ShapeError("model offset/linear shape mismatch");
  for (const auto& r : residues)
    if (r.size() != e) throw ShapeError("model residue matrix shape mismatch");
  const auto slots = classify(poles);  // throws on broken pairing
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (!(poles[i].real() < 0.0))
      throw NumericalError("model has a pole with non-negative real part");
    if (slots[i] == Slot::pair_first) {
      for (std::size_t c = 0; c < e; ++c)
        if (residues[i + 1][c] != std::conj(residues[i][c]))
          throw NumericalError("residue matrices are not conjugate-paired");
    }
    if (slots[i] == Slot::real)
      for (std::size_t c = 0; c < e; ++c)
        if (residues[i][c].imag() != 0.0)
          throw NumericalError("real pole carries a complex residue");
  }
}

std::vector<Complex> evaluate_point(const RationalModel& model, Complex s) {
  const std::size_t e = model.ports * model.ports;
  std::vector<Complex> out(e);
  for (std::size_t c = 0; c < e; ++c)
    out[c] = Complex(model.offset[c], 0.0) +
             (model.include_linear ? s * model.linear[c] : Complex{});
  for (std::size_t j = 0; j < model.poles.size(); ++j) {
    const Complex den = s - model.poles[j];
    if (std::abs(den) < 1e-30)
      throw NumericalError("evaluation frequency coincides with a pole");
    const Complex inv = 1.0 / den;
    for (std::size_t c = 0; c < e; ++c) out[c] += model.residues[j][c] * inv;
  }
  return out;
}

ComplexResponse evaluate(const RationalModel& model, const FrequencyGrid& grid) {
  std::vector<Complex> data;
  data.reserve(grid.count() * model.ports * model.ports);
  for (std::size_t k = 0; k < grid.count(); ++k) {
    const Complex s(0.0, kTwoPi * grid[k]);
    const auto m = evaluate_point(model, s);
    data.insert(data.end(), m.begin(), m.end());
  }
  return ComplexResponse(grid, model.ports, std::move(data));
}

FitResult fit(const ComplexResponse& samples, const FitConfig& config) {
  if (config.order < 1) throw ShapeError("fit order must be >= 1");
  if (config.iterations < 1) throw ShapeError("fit needs >= 1 iteration");
  if (samples.count() < 2 * config.order + 2)
    throw ShapeError("fit needs grid count >= 2*order + 2");
  for (Complex v : samples.data())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("fit samples contain non-finite values");

  Workspace ws;
  ws.ports = samples.ports();
  ws.elements = ws.ports * ws.ports;
  ws.count = samples.count();
  ws.w_scale = kTwoPi * samples.grid().max_hz();
  ws.s.resize(ws.count);
  ws.h.assign(ws.count, std::vector<Complex>(ws.elements));
  for (std::size_t k = 0; k < ws.count; ++k) {
    ws.s[k] = Complex(0.0, kTwoPi * samples.grid()[k] / ws.w_scale);
    const auto m = samples.matrix_at(k);
    std::copy(m.begin(), m.end(), ws.h[k].begin());
  }

  const double w_lo = samples.grid().min_hz() / samples.grid().max_hz();
  std::vector<Complex> poles =
      initial_poles(config.order, w_lo, 1.0, config.initial_poles);

  FitInfo info;
  ResidueSolution sol;
  for (std::size_t iter = 0; iter < config.iterations; ++iter) {
    const auto slots = classify(poles);
    const Eigen::VectorXd sigma =
        solve_sigma_stage(ws, poles, slots, config.include_linear);
    const std::vector<Complex> next = relocate(poles, slots, sigma);
    info.final_pole_movement = pole_movement(poles, next);
    poles = next;
    info.iterations_used = iter + 1;
    if (info.final_pole_movement < config.pole_tolerance) {
      info.converged = true;
      break;
    }
  }
  const auto slots = classify(poles);
  sol = solve_residues(ws, poles, slots, config.include_linear);
  info.rms_residual = sol.rms_residual;

  FitResult result{assemble_model(ws, poles, sol, config.include_linear), info};
  result.model.validate();
  return result;
}

EnsembleUncertainty ensemble_uncertainty(const ComplexResponse& samples,
                                         const std::vector<std::size_t>& orders,
                                         const FrequencyGrid& dense_grid,
                                         const FitConfig& base_config) {
  if (orders.size() < 2)
    throw ShapeError("ensemble uncertainty needs >= 2 orders");
  EnsembleUncertainty out;
  out.members.reserve(orders.size());
  std::vector<ComplexResponse> evals;
  evals.reserve(orders.size());
  for (std::size_t order : orders) {
    FitConfig cfg = base_config;
    cfg.order = order;
    try {
      out.members.push_back(fit(samples, cfg));
    } catch (const std::exception& e) {
      throw NumericalError("ensemble member fit failed (order " +
                           std::to_string(order) + "): " + e.what());
    }
    evals.push_back(evaluate(out.members.back().model, dense_grid));
  }

  const std::size_t count = dense_grid.count();
  out.per_frequency.assign(count, 0.0);
  std::vector<double> pair_sq(orders.size() * orders.size(), 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    double worst = 0.0;
    for (std::size_t m = 0; m + 1 < orders.size(); ++m) {
      for (std::size_t n = m + 1; n < orders.size(); ++n) {
        const double dev =
            frobenius_deviation(evals[m].matrix_at(k), evals[n].matrix_at(k));
        worst = std::max(worst, dev);
        pair_sq[m * orders.size() + n] += dev * dev;
      }
    }
    out.per_frequency[k] = worst;
  }
  for (std::size_t m = 0; m + 1 < orders.size(); ++m)
    for (std::size_t n = m + 1; n < orders.size(); ++n)
      out.band_rmsd =
          std::max(out.band_rmsd, std::sqrt(pair_sq[m * orders.size() + n] /
                                            static_cast<double>(count)));
  return out;
}

std::string RationalModel::serialize() const {
  std::ostringstream out;
  out << "rfs-rational-model v1\n";
  out << "ports " << ports << "\n";
  out << "include_linear " << (include_linear ? 1 : 0) << "\n";
  out << "order " << poles.size() << "\n";
  for (std::size_t j = 0; j < poles.size(); ++j) {
    out << "pole " << format_g17(poles[j].real()) << " "
        << format_g17(poles[j].imag()) << "\n";
    out << "residues";
    for (const Complex& r : residues[j])
      out << " " << format_g17(r.real()) << " " << format_g17(r.imag());
    out << "\n";
  }
  out << "offset";
  for (double v : offset) out << " " << format_g17(v);
  out << "\n";
  out << "linear";
  for (double v : linear) out << " " << format_g17(v);
  out << "\n";
  return out.str();
}

RationalModel RationalModel::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&]() {
    if (!std::getline(in, line)) throw ParseError("unexpected end of model file", line_no);
    ++line_no;
    return line;
  };
  auto expect_key = [&](const std::string& key) -> std::istringstream {
    std::istringstream ls(next_line());
    std::string tok;
    ls >> tok;
    if (tok != key) throw ParseError("expected '" + key + "'", line_no);
    return ls;
  };

  if (next_line() != "rfs-rational-model v1")
    throw ParseError("bad model header", line_no);

  RationalModel model;
  {
    auto ls = expect_key("ports");
    if (!(ls >> model.ports) || model.ports < 1)
      throw ParseError("bad ports", line_no);
  }
  int lin = 0;
  {
    auto ls = expect_key("include_linear");
    if (!(ls >> lin)) throw ParseError("bad include_linear", line_no);
    model.include_linear = lin != 0;
  }
  std::size_t order = 0;
  {
    auto ls = expect_key("order");
    if (!(ls >> order)) throw ParseError("bad order", line_no);
  }
  const std::size_t e = model.ports * model.ports;
  model.poles.resize(order);
  model.residues.assign(order, std::vector<Complex>(e));
  for (std::size_t j = 0; j < order; ++j) {
    auto ls = expect_key("pole");
    double re = 0, im = 0;
    if (!(ls >> re >> im)) throw ParseError("bad pole", line_no);
    model.poles[j] = Complex(re, im);
    auto rs = expect_key("residues");
    for (std::size_t c = 0; c < e; ++c) {
      if (!(rs >> re >> im)) throw ParseError("bad residues", line_no);
      model.residues[j][c] = Complex(re, im);
    }
  }
  model.offset.resize(e);
  {
    auto ls = expect_key("offset");
    for (double& v : model.offset)
      if (!(ls >> v)) throw ParseError("bad offset", line_no);
  }
  model.linear.resize(e);
  {
    auto ls = expect_key("linear");
    for (double& v : model.linear)
      if (!(ls >> v)) throw ParseError("bad linear", line_no);
  }
  return model;
}

}  // namespace rfs::vecfit
