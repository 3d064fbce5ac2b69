#pragma once

#include <utility>

#include "dyadic/model.hpp"

namespace dyadic {

/// Closed-form characteristic function of a supported law.
cplx cf_value(const ComponentDist& dist, double s);
/// First derivative d/ds of cf_value.
cplx cf_derivative_value(const ComponentDist& dist, double s);

ComplexCurve analytic_cf(const ComponentDist& dist, const FreqGrid& grid);
ComplexCurve analytic_cf_deriv(const ComponentDist& dist, const FreqGrid& grid);

/// Density of a law with a density; throws std::invalid_argument for the
/// two-point law and for the point mass.
double density_value(const ComponentDist& dist, double x);
/// Support [lo, hi] of the density (infinite ends for unbounded laws).
std::pair<double, double> density_support(const ComponentDist& dist);

/// Joint CF of Y = (y_ij, y_kj, y_il) with c = 0:
///   phi_Y(s,t,r) = phi_a(s+r) phi_a(t) phi_e(s+t) phi_e(r) phi_eps(s) phi_eps(t) phi_eps(r)
cplx joint_cf(const ModelConfig& config, double s, double t, double r);
/// Partial derivative of joint_cf in its first argument, by the product rule.
cplx joint_cf_ds(const ModelConfig& config, double s, double t, double r);

/// The five slices the identification consumes.
struct PhiYSlices {
  ComplexCurve curve_00r;   // phi_Y(0,0,r)   = CF of y_il
  ComplexCurve curve_0t0;   // phi_Y(0,t,0)   = CF of y_kj
  ComplexCurve curve_s00;   // phi_Y(s,0,0)   = CF of y_ij
  ComplexCurve dcurve_00r;  // d/ds phi_Y at (0,0,r)
  ComplexCurve dcurve_0t0;  // d/ds phi_Y at (0,t,0)
};

PhiYSlices compose_phi_Y_slices(const ModelConfig& config, const FreqGrid& grid);

}  // namespace dyadic
