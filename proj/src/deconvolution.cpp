#include "dyadic/deconvolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dyadic/analytic.hpp"

namespace dyadic {

std::string_view to_string(Window w) { return w == Window::sharp ? "sharp" : "cosine_taper"; }

Window parse_window(std::string_view name) {
  if (name == "sharp") return Window::sharp;
  if (name == "cosine_taper" || name == "cosine") return Window::cosine_taper;
  throw std::invalid_argument("unknown window '" + std::string(name) +
                              "' (expected sharp or cosine_taper)");
}

double window_weight(Window w, double u) noexcept {
  u = std::abs(u);
  if (u > 1.0) return 0.0;
  if (w == Window::sharp || u <= 0.5) return 1.0;
  const double c = std::cos(std::numbers::pi * (u - 0.5));
  return c * c;
}

SpatialGrid::SpatialGrid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw std::invalid_argument("spatial grid needs finite x_min < x_max");
  }
  if (n_points < 2) throw std::invalid_argument("spatial grid needs at least 2 points");
}

SpatialGrid SpatialGrid::symmetric(double half_width, double spacing) {
  if (!(half_width > 0.0) || !(spacing > 0.0)) {
    throw std::invalid_argument("spatial grid half width and spacing must be positive");
  }
  const auto cells = static_cast<std::size_t>(std::llround(half_width / spacing));
  return SpatialGrid(-half_width, half_width, 2 * std::max<std::size_t>(cells, 1) + 1);
}

double SpatialGrid::x(std::size_t i) const noexcept {
  if (i + 1 == n_) return x_max_;
  return x_min_ + static_cast<double>(i) * spacing();
}

std::vector<double> SpatialGrid::points() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = x(i);
  return out;
}

namespace {

double trapezoid(const std::vector<double>& x, const std::vector<double>& f) {
  double total = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) total += 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
  return total;
}

}  // namespace

DensityEstimate invert_cf(const ComplexCurve& curve, double cutoff, Window window,
                          const SpatialGrid& x_grid, double validation_tol) {
  if (curve.kind() != CurveKind::characteristic) {
    throw std::invalid_argument("invert_cf: derivative curves cannot be inverted");
  }
  const auto& grid = curve.grid();
  if (!(cutoff > 0.0)) throw std::invalid_argument("invert_cf: cutoff must be positive");
  if (cutoff > grid.s_max() * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "invert_cf: cutoff " << cutoff << " exceeds the grid support s_max = " << grid.s_max();
    throw std::invalid_argument(msg.str());
  }
  cutoff = std::min(cutoff, grid.s_max());

  DensityEstimate est;
  est.cutoff = cutoff;
  est.window = window;
  est.validation = validate_cf_curve(curve, validation_tol);
  if (!est.validation.passed) {
    std::ostringstream msg;
    msg << "input curve fails CF validation at tolerance " << validation_tol
        << " (max violation " << est.validation.max_violation() << ")";
    est.warnings.push_back(msg.str());
  }

  // Quadrature nodes: grid points inside the cutoff plus the two end points,
  // with trapezoid weights times the window.
  std::vector<double> nodes;
  std::vector<cplx> weighted;
  const double h = grid.spacing();
  const std::size_t half = grid.origin();
  const auto inner = static_cast<std::size_t>(std::floor(cutoff / h * (1.0 + 1e-12)));
  const std::size_t k_max = std::min(inner, half);
  for (std::size_t i = half - k_max; i <= half + k_max; ++i) nodes.push_back(grid.s(i));
  const bool partial = cutoff - grid.s(half + k_max) > 1e-12 * h;
  if (partial) {
    nodes.insert(nodes.begin(), -cutoff);
    nodes.push_back(cutoff);
  }
  std::vector<double> weight(nodes.size(), 0.0);
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    const double dw = 0.5 * (nodes[k] - nodes[k - 1]);
    weight[k - 1] += dw;
    weight[k] += dw;
  }
  weighted.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    weighted.push_back(weight[k] * window_weight(window, nodes[k] / cutoff) * curve.at(nodes[k]));
  }

  est.x = x_grid.points();
  est.values.resize(est.x.size());
  for (std::size_t j = 0; j < est.x.size(); ++j) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      acc += weighted[k] * std::polar(1.0, -nodes[k] * est.x[j]);
    }
    acc /= 2.0 * std::numbers::pi;
    est.values[j] = acc.real();
    est.imag_residual = std::max(est.imag_residual, std::abs(acc.imag()));
  }

  std::vector<double> neg(est.values.size()), pos(est.values.size());
  for (std::size_t j = 0; j < est.values.size(); ++j) {
    neg[j] = std::min(est.values[j], 0.0);
    pos[j] = std::max(est.values[j], 0.0);
  }
  est.mass = trapezoid(est.x, est.values);
  est.negative_mass = trapezoid(est.x, neg);
  est.clipped_mass = trapezoid(est.x, pos);
  return est;
}

std::vector<double> normalized_view(const DensityEstimate& est) {
  std::vector<double> out(est.values.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(est.values[j], 0.0);
  const double mass = trapezoid(est.x, out);
  if (mass > 0.0) {
    for (auto& v : out) v /= mass;
  }
  return out;
}

DensityErrorReport density_error_report(const DensityEstimate& est, const ComponentDist& truth) {
  const auto [s_lo, s_hi] = density_support(truth);
  DensityErrorReport report;
  std::vector<double> xs, diff;
  for (std::size_t j = 0; j < est.x.size(); ++j) {
    if (est.x[j] < s_lo || est.x[j] > s_hi) continue;
    const double d = std::abs(est.values[j] - density_value(truth, est.x[j]));
    report.sup = std::max(report.sup, d);
    xs.push_back(est.x[j]);
    diff.push_back(d);
  }
  if (xs.empty()) {
    // Still reject laws without a density.
    (void)density_value(truth, 0.0);
    return report;
  }
  report.l1 = trapezoid(xs, diff);
  report.lo = xs.front();
  report.hi = xs.back();
  report.points = xs.size();
  return report;
}

}  // namespace dyadic
