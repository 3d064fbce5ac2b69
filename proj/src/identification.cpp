#include "dyadic/identification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dyadic/analytic.hpp"
#include "dyadic/error.hpp"

namespace dyadic {

// ---------------------------------------------------------------------------
// SingularSet / DeltaSchedule

std::size_t SingularSet::index_at(double s) const noexcept {
  if (s >= 0.0) {
    return static_cast<std::size_t>(std::upper_bound(positive.begin(), positive.end(), s) -
                                    positive.begin());
  }
  return static_cast<std::size_t>(negative.end() -
                                  std::lower_bound(negative.begin(), negative.end(), s));
}

double SingularSet::point(int k) const {
  if (k == 0) return 0.0;
  if (k > 0) return positive.at(static_cast<std::size_t>(k - 1));
  const auto back = static_cast<std::size_t>(-k);
  if (back > negative.size()) throw std::out_of_range("singular point index out of range");
  return negative[negative.size() - back];
}

double SingularSet::characteristic_gap() const noexcept {
  std::vector<double> all = negative;
  all.push_back(0.0);
  all.insert(all.end(), positive.begin(), positive.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < all.size(); ++k) gap = std::min(gap, all[k] - all[k - 1]);
  return gap;
}

std::string_view to_string(Extrapolation e) {
  return e == Extrapolation::richardson ? "richardson" : "last_value";
}

Extrapolation parse_extrapolation(std::string_view name) {
  if (name == "richardson") return Extrapolation::richardson;
  if (name == "last_value") return Extrapolation::last_value;
  throw std::invalid_argument("unknown extrapolation '" + std::string(name) +
                              "' (expected richardson or last_value)");
}

void DeltaSchedule::validate() const {
  if (deltas.empty()) throw std::invalid_argument("delta schedule is empty");
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    if (!(deltas[k] > 0.0)) throw std::invalid_argument("delta schedule entries must be positive");
    if (k > 0 && !(deltas[k] < deltas[k - 1])) {
      throw std::invalid_argument("delta schedule must be strictly decreasing");
    }
  }
}

std::vector<double> DeltaSchedule::resolve(double gap) const {
  if (!relative_to_gap) return deltas;
  if (!std::isfinite(gap)) return {};
  std::vector<double> out;
  out.reserve(deltas.size());
  for (double d : deltas) out.push_back(d * gap);
  return out;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(v.begin(), mid);
  return 0.5 * (lower + upper);
}

}  // namespace

std::vector<ZeroVerdict> classify_zeros(const PsiCurve& psi, const ZeroSet& zeros,
                                        std::size_t window, double blowup_factor) {
  if (window == 0) throw std::invalid_argument("classification window must be positive");
  const auto& grid = psi.grid;
  const double h = grid.spacing();
  const std::size_t n = grid.size();
  const std::size_t region = 16 * window;

  std::vector<ZeroVerdict> verdicts;
  verdicts.reserve(zeros.size());
  for (std::size_t z = 0; z < zeros.size(); ++z) {
    const auto& zero = zeros.points[z];
    const std::size_t g = grid.nearest(zero.location);

    for (std::size_t other = 0; other < zeros.size(); ++other) {
      if (other == z) continue;
      if (std::abs(zeros.points[other].location - zero.location) <=
          static_cast<double>(window + 1) * h) {
        std::ostringstream msg;
        msg << "classification window around s=" << zero.location << " reaches the zero at s="
            << zeros.points[other].location << "; grid too coarse";
        throw IdentificationError("classify_singular", msg.str());
      }
    }
    auto near_other_zero = [&](std::size_t i) {
      for (std::size_t other = 0; other < zeros.size(); ++other) {
        if (other != z && std::abs(grid.s(i) - zeros.points[other].location) <=
                              static_cast<double>(window) * h) {
          return true;
        }
      }
      return false;
    };

    double peak = 0.0;
    for (int side : {-1, +1}) {
      std::size_t taken = 0;
      for (std::size_t step = 1; taken < window && step <= region; ++step) {
        const auto offset = static_cast<long long>(step) * side;
        const long long i = static_cast<long long>(g) + offset;
        if (i < 0 || i >= static_cast<long long>(n)) break;
        const auto idx = static_cast<std::size_t>(i);
        if (psi.zero_mask[idx]) continue;
        peak = std::max(peak, std::abs(psi.values[idx]));
        ++taken;
      }
    }

    std::vector<double> surrounding;
    const std::size_t lo = g > region ? g - region : 0;
    const std::size_t hi = std::min(n - 1, g + region);
    for (std::size_t i = lo; i <= hi; ++i) {
      const std::size_t dist = i > g ? i - g : g - i;
      if (dist <= window || psi.zero_mask[i] || near_other_zero(i)) continue;
      surrounding.push_back(std::abs(psi.values[i]));
    }
    const double baseline = surrounding.empty() ? peak : median(std::move(surrounding));

    ZeroVerdict verdict;
    verdict.location = zero.location;
    verdict.peak = peak;
    verdict.baseline = baseline;
    verdict.trusted = zero.trusted;
    verdict.singular = zero.trusted && peak > blowup_factor * baseline;
    verdicts.push_back(verdict);
  }
  return verdicts;
}

SingularSet classify_singular(const PsiCurve& psi, const ZeroSet& zeros, std::size_t window,
                              double blowup_factor) {
  SingularSet out;
  for (const auto& v : classify_zeros(psi, zeros, window, blowup_factor)) {
    if (!v.singular) continue;
    (v.location > 0.0 ? out.positive : out.negative).push_back(v.location);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadrature

cplx integrate_psi_segment(const PsiCurve& psi, double a, double b) {
  const auto& grid = psi.grid;
  const double h = grid.spacing();
  const double edge = grid.s_max() * (1.0 + 1e-12);
  if (a > b) throw std::invalid_argument("integrate_psi_segment: a > b");
  if (a < -edge || b > edge) throw std::invalid_argument("integrate_psi_segment: outside grid");
  if (a == b) return {0.0, 0.0};

  auto check = [&](std::size_t i) {
    if (psi.zero_mask[i]) {
      std::ostringstream msg;
      msg << "segment [" << a << ", " << b << "] crosses the masked point s=" << grid.s(i);
      throw IdentificationError("integrate_psi_segment", msg.str());
    }
  };
  auto value = [&](std::size_t i, double w) {
    if (w < 1.0) check(i);
    if (w > 0.0) check(i + 1);
    return psi.values[i] * (1.0 - w) + psi.values[i + 1] * w;
  };

  const std::size_t ia = grid.cell(a);
  const std::size_t ib = grid.cell(b);
  const double wa = std::clamp((a - grid.s(ia)) / h, 0.0, 1.0);
  const double wb = std::clamp((b - grid.s(ib)) / h, 0.0, 1.0);
  const cplx fa = value(ia, wa);
  const cplx fb = value(ib, wb);
  if (ia == ib) return 0.5 * (b - a) * (fa + fb);

  check(ia + 1);
  cplx total = 0.5 * (grid.s(ia + 1) - a) * (fa + psi.values[ia + 1]);
  for (std::size_t i = ia + 1; i < ib; ++i) {
    check(i + 1);
    total += 0.5 * h * (psi.values[i] + psi.values[i + 1]);
  }
  total += 0.5 * (b - grid.s(ib)) * (psi.values[ib] + fb);
  return total;
}

// ---------------------------------------------------------------------------
// Reconstruction

namespace {

cplx oriented(const PsiCurve& psi, double a, double b) {
  return a <= b ? integrate_psi_segment(psi, a, b) : -integrate_psi_segment(psi, b, a);
}

// The bracketed product for one delta at s >= 0.
cplx product_at(const PsiCurve& psi, const std::vector<double>& singular, double s,
                double delta) {
  const auto bridged =
      static_cast<std::size_t>(std::upper_bound(singular.begin(), singular.end(), s) -
                               singular.begin());
  cplx sum{0.0, 0.0};
  double lo = 0.0;
  for (std::size_t k = 0; k < bridged; ++k) {
    sum += oriented(psi, lo, singular[k] - delta);
    lo = singular[k] + delta;
  }
  sum += oriented(psi, lo, s);
  const cplx value = std::exp(sum);
  return bridged % 2 == 1 ? -value : value;
}

std::vector<cplx> extrapolants(const std::vector<double>& deltas, const std::vector<cplx>& values,
                               Extrapolation mode) {
  if (mode == Extrapolation::last_value) return values;
  std::vector<cplx> out;
  out.reserve(values.size());
  for (std::size_t m = 1; m <= values.size(); ++m) {
    // Neville's scheme evaluated at delta = 0 over the first m points.
    std::vector<cplx> p(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(m));
    for (std::size_t j = 1; j < m; ++j) {
      for (std::size_t i = m - 1; i >= j; --i) {
        p[i] = (-deltas[i - j] * p[i] + deltas[i] * p[i - 1]) / (deltas[i] - deltas[i - j]);
      }
    }
    out.push_back(p[m - 1]);
  }
  return out;
}

DeltaTrace trace_at(const PsiCurve& psi, const std::vector<double>& singular, double s,
                    const std::vector<double>& deltas, Extrapolation mode, double tol) {
  DeltaTrace trace;
  trace.s = s;
  // Near the end of the grid the largest excisions would leave it; those
  // deltas are dropped for this point.
  const auto bridged = std::upper_bound(singular.begin(), singular.end(), s) - singular.begin();
  const double reach = psi.grid.s_max() * (1.0 + 1e-12);
  for (double d : deltas) {
    if (bridged > 0 && singular[static_cast<std::size_t>(bridged - 1)] + d > reach) continue;
    trace.deltas.push_back(d);
  }
  if (trace.deltas.empty()) trace.deltas.push_back(deltas.back());
  for (double d : trace.deltas) trace.values.push_back(product_at(psi, singular, s, d));
  trace.extrapolated = extrapolants(trace.deltas, trace.values, mode);
  const std::size_t m = trace.extrapolated.size();
  if (m >= 2) {
    trace.last_change = std::abs(trace.extrapolated[m - 1] - trace.extrapolated[m - 2]);
    const double prev = m >= 3 ? std::abs(trace.extrapolated[m - 2] - trace.extrapolated[m - 3])
                               : std::numeric_limits<double>::infinity();
    trace.converged = trace.last_change <= tol || trace.last_change < prev;
  }
  return trace;
}

bool near_any(const std::vector<double>& points, double s, double radius) {
  return std::any_of(points.begin(), points.end(),
                     [&](double z) { return std::abs(s - z) < radius; });
}

// Values at s = k h for k = 0..origin, given the positive-side singular points.
std::vector<cplx> reconstruct_half(const PsiCurve& psi, const std::vector<double>& singular,
                                   const std::vector<double>& deltas, double window,
                                   Extrapolation mode, double tol, Reconstruction& stats) {
  const auto& grid = psi.grid;
  const std::size_t half = grid.origin();
  std::vector<cplx> out(half + 1, cplx{0.0, 0.0});
  out[0] = {1.0, 0.0};
  cplx running{0.0, 0.0};  // int_0^{s_k} psi while no singular point has been passed
  for (std::size_t k = 1; k <= half; ++k) {
    const double s = grid.s(half + k);
    if (singular.empty() || s < singular.front()) {
      if (!singular.empty() && near_any(singular, s, window)) continue;
      running += integrate_psi_segment(psi, grid.s(half + k - 1), s);
      out[k] = std::exp(running);
      continue;
    }
    if (near_any(singular, s, window)) continue;
    const DeltaTrace trace = trace_at(psi, singular, s, deltas, mode, tol);
    out[k] = trace.extrapolated.back();
    ++stats.bridged_points;
    stats.worst_change = std::max(stats.worst_change, trace.last_change);
    if (!trace.converged) ++stats.nonconverged_points;
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> singular_windows(const FreqGrid& grid,
                                                                  const std::vector<double>& pts,
                                                                  double window) {
  ZeroSet set;
  for (double z : pts) set.points.push_back({z, grid.nearest(z), 0.0, window, true});
  return mask_windows(grid, set);
}

}  // namespace

Reconstruction reconstruct_cf(const PsiCurve& psi, const SingularSet& singular,
                              const DeltaSchedule& schedule, const ReconstructOptions& options) {
  schedule.validate();
  const auto& grid = psi.grid;
  const double h = grid.spacing();
  const std::size_t n = grid.size();
  const std::size_t half = grid.origin();

  Reconstruction result{ComplexCurve(grid, std::vector<cplx>(n)), {}, 0.0, {}, 0, 0, 0.0};
  if (!singular.empty()) {
    const double gap = singular.characteristic_gap();
    result.deltas = schedule.resolve(gap);
    const double d_min = result.deltas.back();
    const double d_max = result.deltas.front();
    if (h > d_min / 5.0) {
      std::ostringstream msg;
      msg << "grid spacing " << h << " exceeds delta_min/5 = " << d_min / 5.0
          << "; refine the grid or enlarge the delta schedule";
      throw std::invalid_argument(msg.str());
    }
    if (d_max >= 0.5 * gap) {
      std::ostringstream msg;
      msg << "largest delta " << d_max << " reaches half the gap between singular points ("
          << gap << ")";
      throw std::invalid_argument(msg.str());
    }
    result.window = d_min;
  } else if (!schedule.relative_to_gap) {
    result.deltas = schedule.deltas;
  }

  // Masked points away from every singular point (removable zeros, exact
  // zeros of the denominator) are refilled so the quadrature can pass them.
  PsiCurve work = psi;
  {
    std::vector<double> all_singular = singular.negative;
    all_singular.insert(all_singular.end(), singular.positive.begin(), singular.positive.end());
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < n; ++i) {
      if (!work.zero_mask[i] || near_any(all_singular, grid.s(i), result.window + 2.0 * h)) {
        continue;
      }
      if (!runs.empty() && runs.back().second + 1 == i) {
        runs.back().second = i;
      } else {
        runs.emplace_back(i, i);
      }
    }
    fill_windows(grid, work.values, runs);
    for (const auto& [lo, hi] : runs) {
      for (std::size_t i = lo; i <= hi; ++i) work.zero_mask[i] = false;
    }
  }

  const auto mode = schedule.extrapolation;
  const double tol = options.convergence_tol;
  auto& values = result.curve.values();

  const auto positive =
      reconstruct_half(work, singular.positive, result.deltas, result.window, mode, tol, result);
  for (std::size_t k = 0; k <= half; ++k) values[half + k] = positive[k];

  if (options.negative_axis_product) {
    // d/du log phi(-u) = -psi(-u): rebuild the negative axis as a positive one.
    PsiCurve mirrored = work;
    for (std::size_t i = 0; i < n; ++i) {
      mirrored.values[i] = -work.values[grid.mirror(i)];
      mirrored.zero_mask[i] = work.zero_mask[grid.mirror(i)];
    }
    std::vector<double> reflected;
    for (auto it = singular.negative.rbegin(); it != singular.negative.rend(); ++it) {
      reflected.push_back(-*it);
    }
    const auto negative =
        reconstruct_half(mirrored, reflected, result.deltas, result.window, mode, tol, result);
    for (std::size_t k = 1; k <= half; ++k) values[half - k] = negative[k];

    std::vector<double> all = singular.negative;
    all.insert(all.end(), singular.positive.begin(), singular.positive.end());
    fill_windows(grid, values, singular_windows(grid, all, result.window));
  } else {
    fill_windows(grid, values, singular_windows(grid, singular.positive, result.window));
    for (std::size_t k = 1; k <= half; ++k) values[half - k] = std::conj(values[half + k]);
  }
  values[half] = {1.0, 0.0};

  if (!singular.positive.empty()) {
    std::vector<double> probes = options.extra_probes;
    const double offset = std::max(options.probe_offset, result.window + h);
    for (double z : singular.positive) {
      probes.push_back(z - offset);
      probes.push_back(z + offset);
    }
    for (double p : probes) {
      if (p <= 0.0 || p > grid.s_max() || near_any(singular.positive, p, result.window)) continue;
      result.probes.push_back(trace_at(work, singular.positive, p, result.deltas, mode, tol));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Pipeline

Slices estimate_slices(const SampleSet& samples, const FreqGrid& grid) {
  const auto y_ij = centered(samples.column(Column::y_ij));
  const auto y_kj = centered(samples.column(Column::y_kj));
  const auto y_il = centered(samples.column(Column::y_il));
  const double n = static_cast<double>(samples.size());
  return Slices{
      ecf(y_il, grid),
      ecf_partial_first(y_ij, y_il, grid),
      ecf(y_kj, grid),
      ecf_partial_first(y_ij, y_kj, grid),
      ecf(y_ij, grid),
      3.0 / std::sqrt(n),
      samples.size(),
  };
}

Slices oracle_slices(const ModelConfig& config, const FreqGrid& grid) {
  auto slices = compose_phi_Y_slices(config, grid);
  return Slices{
      std::move(slices.curve_00r), std::move(slices.dcurve_00r), std::move(slices.curve_0t0),
      std::move(slices.dcurve_0t0), std::move(slices.curve_s00), 0.0, 0,
  };
}

StageResult identify_stage(std::string name, const ComplexCurve& num, const ComplexCurve& den,
                           double noise_floor, const StageOptions& options) {
  const auto& grid = den.grid();
  const double h = grid.spacing();
  try {
    ZeroSet zeros = detect_zeros(den, options.rel_threshold, {options.neighborhood, noise_floor});
    PsiCurve psi = psi_from_curves(num, den, zeros);
    auto verdicts = classify_zeros(psi, zeros, options.classify_window, options.blowup_factor);

    SingularSet singular;
    ZeroSet removable;
    for (std::size_t z = 0; z < zeros.size(); ++z) {
      if (verdicts[z].singular) {
        (zeros.points[z].location > 0.0 ? singular.positive : singular.negative)
            .push_back(zeros.points[z].location);
      } else {
        ZeroPoint patch = zeros.points[z];
        patch.radius = static_cast<double>(options.classify_window) * h;
        removable.points.push_back(patch);
      }
    }
    const auto windows = mask_windows(grid, removable);
    fill_windows(grid, psi.values, windows);
    for (const auto& [lo, hi] : windows) {
      for (std::size_t i = lo; i <= hi; ++i) psi.zero_mask[i] = false;
    }

    Reconstruction rec = reconstruct_cf(psi, singular, options.schedule, options.reconstruct);
    for (std::size_t z = 0; z < zeros.size(); ++z) {
      zeros.points[z].radius = verdicts[z].singular ? rec.window : 0.0;
    }
    return StageResult{std::move(name), std::move(zeros),  std::move(verdicts),
                       std::move(singular), std::move(psi), std::move(rec)};
  } catch (const IdentificationError& e) {
    throw IdentificationError(name + "/" + e.stage(), e.detail());
  } catch (const std::invalid_argument& e) {
    throw IdentificationError(name + "/reconstruct_cf", e.what());
  }
}

StageResult identify_alpha(const Slices& slices, const StageOptions& options) {
  return identify_stage("alpha", slices.num_alpha, slices.den_alpha, slices.noise_floor, options);
}

StageResult identify_eta(const Slices& slices, const StageOptions& options) {
  return identify_stage("eta", slices.num_eta, slices.den_eta, slices.noise_floor, options);
}

StageResult identify_alpha(const SampleSet& samples, const FreqGrid& grid,
                           const StageOptions& options) {
  const auto y_ij = centered(samples.column(Column::y_ij));
  const auto y_il = centered(samples.column(Column::y_il));
  return identify_stage("alpha", ecf_partial_first(y_ij, y_il, grid), ecf(y_il, grid),
                        3.0 / std::sqrt(static_cast<double>(samples.size())), options);
}

StageResult identify_eta(const SampleSet& samples, const FreqGrid& grid,
                         const StageOptions& options) {
  const auto y_ij = centered(samples.column(Column::y_ij));
  const auto y_kj = centered(samples.column(Column::y_kj));
  return identify_stage("eta", ecf_partial_first(y_ij, y_kj, grid), ecf(y_kj, grid),
                        3.0 / std::sqrt(static_cast<double>(samples.size())), options);
}

EpsilonResult identify_epsilon(const ComplexCurve& phi_y, const ComplexCurve& phi_alpha,
                               const ComplexCurve& phi_eta, const ZeroSet& zeros_union,
                               const EpsilonOptions& options) {
  const auto& grid = phi_y.grid();
  if (!(grid == phi_alpha.grid()) || !(grid == phi_eta.grid())) {
    throw std::invalid_argument("identify_epsilon: curves live on different grids");
  }
  const std::size_t n = grid.size();
  const std::size_t half = grid.origin();

  EpsilonResult result{ComplexCurve(grid, std::vector<cplx>(n)), zeros_union, {}, {}};
  std::vector<bool> in_window(n, false);
  for (const auto& [lo, hi] : mask_windows(grid, zeros_union)) {
    for (std::size_t i = lo; i <= hi; ++i) in_window[i] = true;
  }

  // Points under the floor are grouped into runs. Interior runs are refilled
  // by continuity like the zero windows; a run that reaches the end of the
  // grid has nothing to interpolate from and is set to 0.
  auto& values = result.curve.values();
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = half; i < n; ++i) {
    if (in_window[i] || in_window[grid.mirror(i)]) continue;
    const cplx denom = phi_alpha[i] * phi_eta[i];
    if (std::abs(denom) < options.floor) {
      if (!runs.empty() && runs.back().second + 1 == i) {
        runs.back().second = i;
      } else {
        runs.emplace_back(i, i);
      }
      continue;
    }
    values[i] = phi_y[i] / denom;
  }

  std::vector<std::pair<std::size_t, std::size_t>> windows;
  for (const auto& [lo, hi] : mask_windows(grid, zeros_union)) {
    if (hi >= half) windows.emplace_back(std::max(lo, half), hi);
  }
  for (const auto& [lo, hi] : runs) {
    std::ostringstream msg;
    msg << "|phi_alpha * phi_eta| below floor " << options.floor << " on s in [" << grid.s(lo)
        << ", " << grid.s(hi) << "]";
    ZeroPoint run{0.5 * (grid.s(lo) + grid.s(hi)), (lo + hi) / 2, 0.0,
                  0.5 * (grid.s(hi) - grid.s(lo)), true};
    if (hi + 1 == n) {
      msg << "; set to 0 (no clean points beyond)";
      for (std::size_t i = lo; i <= hi; ++i) values[i] = {0.0, 0.0};
    } else {
      msg << "; masked";
      windows.emplace_back(lo, hi);
    }
    result.warnings.push_back(msg.str());
    ZeroPoint mirrored = run;
    mirrored.location = -run.location;
    mirrored.grid_index = grid.mirror(run.grid_index);
    result.masked.points.push_back(mirrored);
    result.masked.points.push_back(run);
  }
  std::sort(result.masked.points.begin(), result.masked.points.end(),
            [](const ZeroPoint& x, const ZeroPoint& y) { return x.location < y.location; });

  // Windows that touch or nearly touch are refilled as one.
  std::sort(windows.begin(), windows.end());
  std::vector<std::pair<std::size_t, std::size_t>> merged;
  for (const auto& w : windows) {
    if (!merged.empty() && w.first < merged.back().second + 3) {
      merged.back().second = std::max(merged.back().second, w.second);
    } else {
      merged.push_back(w);
    }
  }
  for (std::size_t k = 1; k <= half; ++k) values[half - k] = std::conj(values[half + k]);
  try {
    fill_windows(grid, values, merged);
  } catch (const IdentificationError& e) {
    throw IdentificationError("epsilon/" + e.stage(), e.detail());
  }
  for (std::size_t k = 1; k <= half; ++k) values[half - k] = std::conj(values[half + k]);
  const double anchor = values[half].real();
  if (!(anchor != 0.0) || !std::isfinite(anchor)) {
    throw IdentificationError("epsilon", "ratio at the origin is not finite and nonzero");
  }
  for (auto& v : values) v /= anchor;
  values[half] = {1.0, 0.0};

  result.validation = validate_cf_curve(result.curve, options.validation_tol);
  if (!result.validation.passed) {
    std::ostringstream msg;
    msg << "identified curve is not a characteristic function (max violation "
        << result.validation.max_violation() << " > " << options.validation_tol
        << "; |phi| exceeds 1 by " << result.validation.modulus_violation
        << "); the three input curves are inconsistent";
    throw IdentificationError("epsilon", msg.str());
  }
  return result;
}

Identification identify_all(const Slices& slices, const StageOptions& stage,
                            const EpsilonOptions& epsilon) {
  StageResult alpha = identify_alpha(slices, stage);
  StageResult eta = identify_eta(slices, stage);
  const ZeroSet both =
      ZeroSet::unite(alpha.zeros, eta.zeros, slices.phi_y.grid().spacing());
  EpsilonOptions eps_options = epsilon;
  eps_options.floor = std::max(epsilon.floor, slices.noise_floor);
  EpsilonResult eps =
      identify_epsilon(slices.phi_y, alpha.curve(), eta.curve(), both, eps_options);
  return Identification{std::move(alpha), std::move(eta), std::move(eps)};
}

}  // namespace dyadic
