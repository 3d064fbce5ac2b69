#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dyadic/model.hpp"

namespace dyadic {

struct ZeroPoint {
  double location = 0.0;       // refined position
  std::size_t grid_index = 0;  // nearest grid point at detection
  double modulus = 0.0;        // |phi| at grid_index
  double radius = 0.0;         // half-width of the masked window; 0 masks grid_index only
  bool trusted = true;         // false when the dip does not clear the noise floor
};

/// Real zeros of a curve, strictly increasing.
struct ZeroSet {
  std::vector<ZeroPoint> points;

  bool empty() const noexcept { return points.empty(); }
  std::size_t size() const noexcept { return points.size(); }
  std::vector<double> locations() const;

  /// Sorted union. Points closer than `merge_within` collapse into one entry
  /// that keeps the larger radius and is trusted if either side was.
  static ZeroSet unite(const ZeroSet& a, const ZeroSet& b, double merge_within);
};

struct ZeroDetectOptions {
  /// Half-width (in units of s) of the neighbourhood whose maximum modulus
  /// the dip is compared against.
  double neighborhood = 0.5;
  /// Estimation noise level of the modulus (3/sqrt(n) for an ECF, 0 for
  /// analytic curves). A zero is trusted only if the modulus climbs above this
  /// floor on both sides within the neighbourhood.
  double noise_floor = 0.0;
};

/// Candidates are strict local minima of |phi| below rel_threshold times the
/// neighbourhood maximum. Each is located by the vertex of the parabola through
/// |phi|^2 at the three nearest grid points and then polished by minimising the
/// modulus of the complex quadratic interpolant. Throws IdentificationError
/// ("detect_zeros") when two zeros are closer than two grid spacings.
ZeroSet detect_zeros(const ComplexCurve& curve, double rel_threshold,
                     const ZeroDetectOptions& options = {});

/// Inclusive index ranges masked around each zero: every grid point within
/// `radius` of the zero plus the nearest grid point.
std::vector<std::pair<std::size_t, std::size_t>> mask_windows(const FreqGrid& grid,
                                                              const ZeroSet& zeros);

/// Refill masked windows in place by the cubic through the two nearest clean
/// points on each side. Throws IdentificationError ("extend_by_continuity")
/// when windows overlap or leave fewer than two clean points between them.
void fill_windows(const FreqGrid& grid, std::span<cplx> values,
                  const std::vector<std::pair<std::size_t, std::size_t>>& windows);

ComplexCurve extend_by_continuity(const ComplexCurve& curve, const ZeroSet& masked);

}  // namespace dyadic
