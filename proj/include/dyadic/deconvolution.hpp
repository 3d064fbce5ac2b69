#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dyadic/model.hpp"

namespace dyadic {

/// Frequency weight w(u), u = |s| / cutoff, applied before inversion.
///   sharp         1 on |u| <= 1
///   cosine_taper  1 on |u| <= 1/2, then cos^2(pi (|u| - 1/2)), reaching 0 at |u| = 1
enum class Window { sharp, cosine_taper };

std::string_view to_string(Window w);
Window parse_window(std::string_view name);
double window_weight(Window w, double u) noexcept;

/// Uniform grid x_min, ..., x_max with n >= 2 points.
class SpatialGrid {
 public:
  SpatialGrid(double x_min, double x_max, std::size_t n_points);
  /// Symmetric grid on [-half_width, half_width] with spacing close to `spacing`.
  static SpatialGrid symmetric(double half_width, double spacing);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return (x_max_ - x_min_) / static_cast<double>(n_ - 1); }
  double x(std::size_t i) const noexcept;
  std::vector<double> points() const;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
};

struct DensityEstimate {
  std::vector<double> x;
  std::vector<double> values;  // real part; negative lobes kept
  double cutoff = 0.0;
  Window window = Window::cosine_taper;
  double imag_residual = 0.0;  // max |Im f| over the grid
  double mass = 0.0;           // trapezoid integral of values
  double negative_mass = 0.0;  // integral of min(values, 0), <= 0
  double clipped_mass = 0.0;   // integral of max(values, 0)
  CfValidation validation;     // of the input curve
  std::vector<std::string> warnings;

  double spacing() const noexcept { return x.size() > 1 ? x[1] - x[0] : 0.0; }
  /// Whether the clipped mass lies in [0.95, 1.05]. Reported, not enforced.
  bool mass_in_range() const noexcept { return clipped_mass >= 0.95 && clipped_mass <= 1.05; }
};

/// f(x) = (1/2 pi) int_{|s| <= cutoff} exp(-isx) phi(s) w(s / cutoff) ds by the
/// trapezoid rule on the curve's grid, with partial end cells when the cutoff
/// falls between grid points. Throws std::invalid_argument when the cutoff is
/// not positive or exceeds s_max, or for derivative curves. A curve failing
/// validate_cf_curve at validation_tol only adds a warning.
DensityEstimate invert_cf(const ComplexCurve& curve, double cutoff, Window window,
                          const SpatialGrid& x_grid, double validation_tol = 0.1);

/// Values clipped at 0 and rescaled to unit mass, for plotting.
std::vector<double> normalized_view(const DensityEstimate& est);

struct DensityErrorReport {
  double sup = 0.0;
  double l1 = 0.0;
  double lo = 0.0;  // overlap of the x-grid and the support
  double hi = 0.0;
  std::size_t points = 0;
};

/// Sup and L1 (trapezoid) distance to the analytic density over the grid
/// points inside the truth's support. Throws std::invalid_argument when the
/// truth has no density.
DensityErrorReport density_error_report(const DensityEstimate& est, const ComponentDist& truth);

}  // namespace dyadic
