#include "dyadic/cf_engine.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dyadic {

namespace {

// Re-anchor the rotation recurrence with an exact sincos every this many steps.
constexpr std::size_t kReanchor = 32;

// acc[k] += weight_m * exp(i k h x_m) for k = 0..half, over all m. Only the
// non-negative half of the grid is accumulated; callers mirror it.
void accumulate_half(std::span<const double> x, std::span<const double> weight, double h,
                     std::size_t half, std::vector<double>& re, std::vector<double>& im) {
  re.assign(half + 1, 0.0);
  im.assign(half + 1, 0.0);
  for (std::size_t m = 0; m < x.size(); ++m) {
    const double w = weight.empty() ? 1.0 : weight[m];
    const double step_c = std::cos(h * x[m]);
    const double step_s = std::sin(h * x[m]);
    double c = 1.0;
    double s = 0.0;
    for (std::size_t k = 0; k <= half; ++k) {
      if (k % kReanchor == 0 && k > 0) {
        const double phase = static_cast<double>(k) * h * x[m];
        c = std::cos(phase);
        s = std::sin(phase);
      }
      re[k] += w * c;
      im[k] += w * s;
      const double nc = c * step_c - s * step_s;
      s = s * step_c + c * step_s;
      c = nc;
    }
  }
}

}  // namespace

std::vector<double> centered(std::span<const double> column) {
  if (column.empty()) return {};
  const double mean =
      std::accumulate(column.begin(), column.end(), 0.0) / static_cast<double>(column.size());
  std::vector<double> out(column.begin(), column.end());
  for (auto& v : out) v -= mean;
  return out;
}

ComplexCurve ecf(std::span<const double> column, const FreqGrid& grid) {
  if (column.empty()) throw std::invalid_argument("ecf: empty column");
  const std::size_t half = grid.origin();
  std::vector<double> re, im;
  accumulate_half(column, {}, grid.spacing(), half, re, im);

  const auto n = static_cast<double>(column.size());
  std::vector<cplx> values(grid.size());
  for (std::size_t k = 0; k <= half; ++k) {
    const cplx v{re[k] / n, im[k] / n};
    values[half + k] = v;
    values[half - k] = std::conj(v);
  }
  values[half] = {re[0] / n, 0.0};
  return ComplexCurve(grid, std::move(values), CurveKind::characteristic);
}

ComplexCurve ecf_partial_first(std::span<const double> y_first,
                               std::span<const double> y_anchor, const FreqGrid& grid) {
  if (y_first.empty() || y_anchor.empty()) {
    throw std::invalid_argument("ecf_partial_first: empty input");
  }
  if (y_first.size() != y_anchor.size()) {
    throw std::invalid_argument("ecf_partial_first: columns differ in length (" +
                                std::to_string(y_first.size()) + " vs " +
                                std::to_string(y_anchor.size()) + ")");
  }
  const std::size_t half = grid.origin();
  std::vector<double> re, im;
  accumulate_half(y_anchor, y_first, grid.spacing(), half, re, im);

  // i * (re + i im) = -im + i re. For real data the value at -r is -conj(value at r).
  const auto n = static_cast<double>(y_first.size());
  std::vector<cplx> values(grid.size());
  for (std::size_t k = 0; k <= half; ++k) {
    const cplx v{-im[k] / n, re[k] / n};
    values[half + k] = v;
    values[half - k] = -std::conj(v);
  }
  values[half] = {0.0, re[0] / n};
  return ComplexCurve(grid, std::move(values), CurveKind::derivative);
}

PsiCurve psi_from_curves(const ComplexCurve& num, const ComplexCurve& den, const ZeroSet& zeros) {
  if (!(num.grid() == den.grid())) throw std::invalid_argument("psi_from_curves: grid mismatch");
  const auto& grid = den.grid();
  PsiCurve psi{grid, std::vector<cplx>(grid.size()), std::vector<bool>(grid.size(), false)};
  for (const auto& z : zeros.points) psi.zero_mask[grid.nearest(z.location)] = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (psi.zero_mask[i]) continue;
    const cplx ratio = num[i] / den[i];
    if (den[i] == cplx{0.0, 0.0} || !std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) {
      psi.zero_mask[i] = true;
      continue;
    }
    psi.values[i] = ratio;
  }
  return psi;
}

}  // namespace dyadic
