#pragma once

#include <span>
#include <vector>

#include "dyadic/model.hpp"
#include "dyadic/zeros.hpp"

namespace dyadic {

/// Ratio of a derivative slice to a CF slice. Masked points hold exactly 0.
struct PsiCurve {
  FreqGrid grid;
  std::vector<cplx> values;
  std::vector<bool> zero_mask;

  std::size_t size() const noexcept { return values.size(); }
  bool masked(std::size_t i) const { return zero_mask[i]; }
};

/// Column minus its sample mean.
std::vector<double> centered(std::span<const double> column);

/// Empirical CF (1/n) sum_m exp(i s x_m). Throws std::invalid_argument when empty.
ComplexCurve ecf(std::span<const double> column, const FreqGrid& grid);

/// (1/n) sum_m i y_first,m exp(i r y_anchor,m): the moment estimator of
/// d/ds phi_Y(0,0,r) when y_first = y_ij and y_anchor = y_il. Derivative-tagged.
ComplexCurve ecf_partial_first(std::span<const double> y_first,
                               std::span<const double> y_anchor, const FreqGrid& grid);

/// num / den off the zeros of den; 0 at the grid point nearest to each zero
/// and wherever den vanishes exactly.
PsiCurve psi_from_curves(const ComplexCurve& num, const ComplexCurve& den, const ZeroSet& zeros);

}  // namespace dyadic
