#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "dyadic/cf_engine.hpp"
#include "dyadic/model.hpp"
#include "dyadic/zeros.hpp"

namespace dyadic {

/// Zeros of a denominator slice at which psi blows up, enumerated outward
/// from the origin: positive = s(1) < s(2) < ..., negative = ... < s(-2) < s(-1).
/// s(0) = 0 is implicit.
struct SingularSet {
  std::vector<double> positive;
  std::vector<double> negative;

  bool empty() const noexcept { return positive.empty() && negative.empty(); }

  /// k-bar(s): for s >= 0 the largest k with s(k) <= s; for s < 0 the number
  /// of negative points >= s.
  std::size_t index_at(double s) const noexcept;
  /// s(k) for any integer k in range; s(0) = 0. Throws std::out_of_range.
  double point(int k) const;
  /// Smallest distance between consecutive members of {..., s(-1), 0, s(1), ...};
  /// infinity when the set is empty.
  double characteristic_gap() const noexcept;
};

enum class Extrapolation { last_value, richardson };

std::string_view to_string(Extrapolation e);
Extrapolation parse_extrapolation(std::string_view name);

/// Excision radii for the delta -> 0 limit. When relative_to_gap is set the
/// entries are multiples of SingularSet::characteristic_gap().
struct DeltaSchedule {
  std::vector<double> deltas{0.2, 0.1, 0.05, 0.025};
  Extrapolation extrapolation = Extrapolation::richardson;
  bool relative_to_gap = true;

  /// Throws std::invalid_argument unless deltas are positive and strictly decreasing.
  void validate() const;
  std::vector<double> resolve(double gap) const;
};

struct ZeroVerdict {
  double location = 0.0;
  double peak = 0.0;      // max |psi| over the window next to the zero
  double baseline = 0.0;  // median |psi| over the surrounding region
  bool trusted = true;
  bool singular = false;
};

/// Classify every zero. A zero is singular when it is trusted and the peak
/// exceeds blowup_factor times the baseline. The window holds `window` unmasked
/// grid points on each side; the baseline region extends to 16 * window points.
/// Throws IdentificationError ("classify_singular") when a window reaches
/// another zero.
std::vector<ZeroVerdict> classify_zeros(const PsiCurve& psi, const ZeroSet& zeros,
                                        std::size_t window, double blowup_factor);

SingularSet classify_singular(const PsiCurve& psi, const ZeroSet& zeros, std::size_t window,
                              double blowup_factor);

/// Trapezoid on the stored grid over [a, b], with the values at a and b taken
/// by linear interpolation. Throws std::invalid_argument if a > b or the
/// segment leaves the grid, IdentificationError if it touches a masked point.
cplx integrate_psi_segment(const PsiCurve& psi, double a, double b);

/// Product values at one point for every delta, with the extrapolants that
/// use the first m deltas.
struct DeltaTrace {
  double s = 0.0;
  std::vector<double> deltas;
  std::vector<cplx> values;
  std::vector<cplx> extrapolated;
  double last_change = 0.0;  // |T_M - T_{M-1}|
  bool converged = true;
};

struct ReconstructOptions {
  /// Fill s < 0 by the mirrored product instead of Hermitian symmetry.
  bool negative_axis_product = false;
  /// Probes are placed at z -+ probe_offset around every positive singular z.
  double probe_offset = 0.1;
  std::vector<double> extra_probes;
  /// A delta sequence is accepted when its last change is below this or still shrinking.
  double convergence_tol = 1e-3;
};

struct Reconstruction {
  ComplexCurve curve;
  std::vector<double> deltas;  // resolved schedule
  double window = 0.0;         // radius refilled by continuity around singular points
  std::vector<DeltaTrace> probes;
  std::size_t bridged_points = 0;
  std::size_t nonconverged_points = 0;
  double worst_change = 0.0;

  bool converged() const noexcept { return nonconverged_points == 0; }
};

/// Rebuild a CF from its logarithmic derivative psi.
///
/// For s >= 0 with K = k-bar(s) the product over the segments between
/// consecutive singular points is evaluated for each delta,
///
///   (-1)^K exp( int_0^{s(1)-d} psi + sum_{k=2..K} int_{s(k-1)+d}^{s(k)-d} psi
///               + int_{s(K)+d}^{s} psi ),
///
/// and extrapolated to delta = 0 (Neville for richardson, last entry for
/// last_value). Each bridged simple zero contributes the factor
/// phi(z-d)/phi(z+d), whose limit is -1, hence the sign. The origin itself is
/// never excised since phi(0) = 1 makes psi continuous there. The value at 0
/// is exactly 1; points within the smallest delta of a singular point are
/// refilled by continuity; s < 0 follows by Hermitian symmetry unless
/// options.negative_axis_product is set.
///
/// Throws std::invalid_argument when the grid spacing exceeds delta_min / 5 or
/// the largest delta reaches half the characteristic gap.
Reconstruction reconstruct_cf(const PsiCurve& psi, const SingularSet& singular,
                              const DeltaSchedule& schedule, const ReconstructOptions& options = {});

/// The five curves the identification consumes, from data or from the oracle.
struct Slices {
  ComplexCurve den_alpha;  // phi_Y(0,0,r)
  ComplexCurve num_alpha;  // d/ds phi_Y(0,0,r)
  ComplexCurve den_eta;    // phi_Y(0,t,0)
  ComplexCurve num_eta;    // d/ds phi_Y(0,t,0)
  ComplexCurve phi_y;      // CF of y_ij
  double noise_floor = 0.0;
  std::size_t n_samples = 0;  // 0 in oracle mode
};

/// ECF slices from data. Columns are centered by their sample means, which
/// removes the intercept c. noise_floor = 3 / sqrt(n).
Slices estimate_slices(const SampleSet& samples, const FreqGrid& grid);
/// Noise-free slices from the closed-form CFs of the configured laws.
Slices oracle_slices(const ModelConfig& config, const FreqGrid& grid);

struct StageOptions {
  double rel_threshold = 0.1;
  double neighborhood = 0.5;
  std::size_t classify_window = 3;
  double blowup_factor = 10.0;
  DeltaSchedule schedule;
  ReconstructOptions reconstruct;
};

/// One application of the product formula (alpha side or eta side).
struct StageResult {
  std::string name;
  ZeroSet zeros;  // denominator zeros; radius = window masked for the division step
  std::vector<ZeroVerdict> verdicts;
  SingularSet singular;
  PsiCurve psi;  // removable zeros already refilled
  Reconstruction reconstruction;

  const ComplexCurve& curve() const noexcept { return reconstruction.curve; }
};

/// detect_zeros -> psi_from_curves -> classify_singular -> reconstruct_cf.
/// Untrusted zeros (dips inside the noise floor) are never bridged. Stage
/// failures are rethrown as IdentificationError("<name>/<stage>").
StageResult identify_stage(std::string name, const ComplexCurve& num, const ComplexCurve& den,
                           double noise_floor, const StageOptions& options);

StageResult identify_alpha(const Slices& slices, const StageOptions& options = {});
StageResult identify_eta(const Slices& slices, const StageOptions& options = {});
StageResult identify_alpha(const SampleSet& samples, const FreqGrid& grid,
                           const StageOptions& options = {});
StageResult identify_eta(const SampleSet& samples, const FreqGrid& grid,
                         const StageOptions& options = {});

struct EpsilonOptions {
  /// Unmasked points where |phi_alpha * phi_eta| falls below this are masked
  /// and refilled; a masked run reaching the end of the grid is set to 0.
  /// identify_all raises it to the noise floor of the slices.
  double floor = 1e-10;
  /// The result must pass validate_cf_curve at this tolerance.
  double validation_tol = 0.1;
};

struct EpsilonResult {
  ComplexCurve curve;
  ZeroSet masked;
  std::vector<std::string> warnings;
  CfValidation validation;
};

/// phi_y / (phi_alpha phi_eta) off the masked zeros, refilled by continuity,
/// Hermitian by construction and re-anchored to 1 at the origin. Throws
/// IdentificationError("epsilon") when the result is not a valid CF.
EpsilonResult identify_epsilon(const ComplexCurve& phi_y, const ComplexCurve& phi_alpha,
                               const ComplexCurve& phi_eta, const ZeroSet& zeros_union,
                               const EpsilonOptions& options = {});

struct Identification {
  StageResult alpha;
  StageResult eta;
  EpsilonResult epsilon;
};

Identification identify_all(const Slices& slices, const StageOptions& stage = {},
                            const EpsilonOptions& epsilon = {});

}  // namespace dyadic
