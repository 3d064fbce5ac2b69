#include "dyadic/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dyadic {

namespace {

// sin(x)/x and its derivative, with series near the origin.
double sinc(double x) {
  if (std::abs(x) < 1e-2) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0;
  }
  return std::sin(x) / x;
}

double sinc_prime(double x) {
  if (std::abs(x) < 1e-2) {
    const double x2 = x * x;
    return x * (-1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0);
  }
  return (x * std::cos(x) - std::sin(x)) / (x * x);
}

}  // namespace

cplx cf_value(const ComponentDist& dist, double s) {
  if (dist.degenerate()) return {1.0, 0.0};
  const double a = dist.scale();
  switch (dist.kind()) {
    case DistKind::normal:
      return {std::exp(-0.5 * a * a * s * s), 0.0};
    case DistKind::laplace:
      return {1.0 / (1.0 + a * a * s * s), 0.0};
    case DistKind::uniform_symmetric:
      return {sinc(a * s), 0.0};
    case DistKind::two_point_symmetric:
      return {std::cos(a * s), 0.0};
    case DistKind::shifted_exponential:
      return std::polar(1.0, -a * s) / cplx(1.0, -a * s);
  }
  return {1.0, 0.0};
}

cplx cf_derivative_value(const ComponentDist& dist, double s) {
  if (dist.degenerate()) return {0.0, 0.0};
  const double a = dist.scale();
  switch (dist.kind()) {
    case DistKind::normal:
      return {-a * a * s * std::exp(-0.5 * a * a * s * s), 0.0};
    case DistKind::laplace: {
      const double q = 1.0 + a * a * s * s;
      return {-2.0 * a * a * s / (q * q), 0.0};
    }
    case DistKind::uniform_symmetric:
      return {a * sinc_prime(a * s), 0.0};
    case DistKind::two_point_symmetric:
      return {-a * std::sin(a * s), 0.0};
    case DistKind::shifted_exponential: {
      // d/ds e^{-ias}/(1-ias) = -a^2 s e^{-ias}/(1-ias)^2
      const cplx q(1.0, -a * s);
      return -a * a * s * std::polar(1.0, -a * s) / (q * q);
    }
  }
  return {0.0, 0.0};
}

ComplexCurve analytic_cf(const ComponentDist& dist, const FreqGrid& grid) {
  std::vector<cplx> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = cf_value(dist, grid.s(i));
  return ComplexCurve(grid, std::move(values), CurveKind::characteristic);
}

ComplexCurve analytic_cf_deriv(const ComponentDist& dist, const FreqGrid& grid) {
  std::vector<cplx> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = cf_derivative_value(dist, grid.s(i));
  return ComplexCurve(grid, std::move(values), CurveKind::derivative);
}

double density_value(const ComponentDist& dist, double x) {
  if (dist.degenerate()) throw std::invalid_argument("point mass has no density");
  const double a = dist.scale();
  switch (dist.kind()) {
    case DistKind::normal:
      return std::exp(-0.5 * x * x / (a * a)) / (a * std::sqrt(2.0 * std::numbers::pi));
    case DistKind::laplace:
      return std::exp(-std::abs(x) / a) / (2.0 * a);
    case DistKind::uniform_symmetric:
      return std::abs(x) <= a ? 0.5 / a : 0.0;
    case DistKind::two_point_symmetric:
      throw std::invalid_argument("two_point_symmetric has no density");
    case DistKind::shifted_exponential:
      return x < -a ? 0.0 : std::exp(-(x + a) / a) / a;
  }
  return 0.0;
}

std::pair<double, double> density_support(const ComponentDist& dist) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double a = dist.scale();
  switch (dist.kind()) {
    case DistKind::uniform_symmetric:
    case DistKind::two_point_symmetric:
      return {-a, a};
    case DistKind::shifted_exponential:
      return {-a, inf};
    default:
      return {-inf, inf};
  }
}

cplx joint_cf(const ModelConfig& config, double s, double t, double r) {
  return cf_value(config.alpha, s + r) * cf_value(config.alpha, t) *
         cf_value(config.eta, s + t) * cf_value(config.eta, r) * cf_value(config.eps, s) *
         cf_value(config.eps, t) * cf_value(config.eps, r);
}

cplx joint_cf_ds(const ModelConfig& config, double s, double t, double r) {
  const cplx outer = cf_value(config.alpha, t) * cf_value(config.eta, r) *
                     cf_value(config.eps, t) * cf_value(config.eps, r);
  const cplx fa = cf_value(config.alpha, s + r);
  const cplx fe = cf_value(config.eta, s + t);
  const cplx fx = cf_value(config.eps, s);
  const cplx da = cf_derivative_value(config.alpha, s + r);
  const cplx de = cf_derivative_value(config.eta, s + t);
  const cplx dx = cf_derivative_value(config.eps, s);
  return outer * ((da * fe + de * fa) * fx + fa * fe * dx);
}

PhiYSlices compose_phi_Y_slices(const ModelConfig& config, const FreqGrid& grid) {
  const std::size_t n = grid.size();
  std::vector<cplx> c00r(n), c0t0(n), cs00(n), d00r(n), d0t0(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = grid.s(i);
    c00r[i] = joint_cf(config, 0.0, 0.0, u);
    c0t0[i] = joint_cf(config, 0.0, u, 0.0);
    cs00[i] = joint_cf(config, u, 0.0, 0.0);
    d00r[i] = joint_cf_ds(config, 0.0, 0.0, u);
    d0t0[i] = joint_cf_ds(config, 0.0, u, 0.0);
  }
  return PhiYSlices{
      ComplexCurve(grid, std::move(c00r)),
      ComplexCurve(grid, std::move(c0t0)),
      ComplexCurve(grid, std::move(cs00)),
      ComplexCurve(grid, std::move(d00r), CurveKind::derivative),
      ComplexCurve(grid, std::move(d0t0), CurveKind::derivative),
  };
}

}  // namespace dyadic
