#include "dyadic/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dyadic/error.hpp"

namespace dyadic {

std::vector<double> ZeroSet::locations() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.location);
  return out;
}

ZeroSet ZeroSet::unite(const ZeroSet& a, const ZeroSet& b, double merge_within) {
  std::vector<ZeroPoint> all = a.points;
  all.insert(all.end(), b.points.begin(), b.points.end());
  std::sort(all.begin(), all.end(),
            [](const ZeroPoint& x, const ZeroPoint& y) { return x.location < y.location; });
  ZeroSet out;
  for (const auto& p : all) {
    if (!out.points.empty() && p.location - out.points.back().location <= merge_within) {
      auto& last = out.points.back();
      last.radius = std::max(last.radius, p.radius);
      last.trusted = last.trusted || p.trusted;
      if (p.modulus < last.modulus) {
        last.modulus = p.modulus;
        last.grid_index = p.grid_index;
      }
      continue;
    }
    out.points.push_back(p);
  }
  return out;
}

namespace {

// Minimise |q(x)| for q(x) = q0 + b x + c x^2 by Newton on d/dx |q|^2.
double polish_root(cplx q0, cplx b, cplx c, double start, double limit) {
  auto q = [&](double x) { return q0 + x * (b + x * c); };
  double x = start;
  for (int iter = 0; iter < 12; ++iter) {
    const cplx qv = q(x);
    const cplx dq = b + 2.0 * x * c;
    const double grad = std::real(std::conj(qv) * dq);
    const double curv = std::norm(dq) + std::real(std::conj(qv) * 2.0 * c);
    if (!(curv > 0.0)) break;
    const double step = grad / curv;
    x = std::clamp(x - step, -limit, limit);
    if (std::abs(step) < 1e-15 * (1.0 + limit)) break;
  }
  return std::abs(q(x)) <= std::abs(q(start)) ? x : start;
}

}  // namespace

ZeroSet detect_zeros(const ComplexCurve& curve, double rel_threshold,
                     const ZeroDetectOptions& options) {
  const auto& grid = curve.grid();
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const auto reach = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(options.neighborhood / h)));

  std::vector<double> mod(n);
  for (std::size_t i = 0; i < n; ++i) mod[i] = std::abs(curve[i]);

  ZeroSet found;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(mod[i] < mod[i - 1] && mod[i] < mod[i + 1])) continue;
    const std::size_t lo = i > reach ? i - reach : 0;
    const std::size_t hi = std::min(n - 1, i + reach);
    const double left_max = *std::max_element(mod.begin() + lo, mod.begin() + i);
    const double right_max = *std::max_element(mod.begin() + i + 1, mod.begin() + hi + 1);
    if (!(mod[i] < rel_threshold * std::max(left_max, right_max))) continue;

    const double fm = mod[i - 1] * mod[i - 1];
    const double f0 = mod[i] * mod[i];
    const double fp = mod[i + 1] * mod[i + 1];
    const double vertex = 0.5 * h * (fm - fp) / (fm - 2.0 * f0 + fp);

    const cplx b = (curve[i + 1] - curve[i - 1]) / (2.0 * h);
    const cplx c = (curve[i + 1] - 2.0 * curve[i] + curve[i - 1]) / (2.0 * h * h);
    const double offset = polish_root(curve[i], b, c, vertex, h);

    ZeroPoint zero;
    zero.location = grid.s(i) + offset;
    zero.grid_index = i;
    zero.modulus = mod[i];
    zero.trusted = options.noise_floor <= 0.0 ||
                   (left_max > options.noise_floor && right_max > options.noise_floor);

    if (!found.points.empty() && zero.location - found.points.back().location <= h) {
      if (zero.modulus < found.points.back().modulus) found.points.back() = zero;
      continue;
    }
    found.points.push_back(zero);
  }

  for (std::size_t k = 1; k < found.size(); ++k) {
    const double gap = found.points[k].location - found.points[k - 1].location;
    if (gap < 2.0 * h) {
      std::ostringstream msg;
      msg << "zeros at " << found.points[k - 1].location << " and " << found.points[k].location
          << " are closer than two grid spacings (" << 2.0 * h
          << "); refine the frequency grid";
      throw IdentificationError("detect_zeros", msg.str());
    }
  }
  return found;
}

std::vector<std::pair<std::size_t, std::size_t>> mask_windows(const FreqGrid& grid,
                                                              const ZeroSet& zeros) {
  std::vector<std::pair<std::size_t, std::size_t>> windows;
  const double h = grid.spacing();
  for (const auto& z : zeros.points) {
    std::size_t lo = grid.nearest(z.location);
    std::size_t hi = lo;
    if (z.radius > 0.0) {
      const auto first = grid.nearest(z.location - z.radius);
      const auto last = grid.nearest(z.location + z.radius);
      for (std::size_t i = first; i <= last; ++i) {
        if (std::abs(grid.s(i) - z.location) < z.radius + 1e-12 * h) {
          lo = std::min(lo, i);
          hi = std::max(hi, i);
        }
      }
    }
    windows.emplace_back(lo, hi);
  }
  std::sort(windows.begin(), windows.end());
  return windows;
}

void fill_windows(const FreqGrid& grid, std::span<cplx> values,
                  const std::vector<std::pair<std::size_t, std::size_t>>& windows) {
  const std::size_t n = grid.size();
  for (std::size_t w = 1; w < windows.size(); ++w) {
    if (windows[w].first < windows[w - 1].second + 3) {
      std::ostringstream msg;
      msg << "masked windows around s=" << grid.s(windows[w - 1].second) << " and s="
          << grid.s(windows[w].first) << " leave fewer than two clean points between them";
      throw IdentificationError("extend_by_continuity", msg.str());
    }
  }

  for (const auto& [lo, hi] : windows) {
    // Two clean points on each side when available, else the nearest clean
    // points on whichever side the grid still has.
    std::vector<std::size_t> nodes;
    if (lo >= 2) nodes.insert(nodes.end(), {lo - 2, lo - 1});
    if (hi + 2 < n) nodes.insert(nodes.end(), {hi + 1, hi + 2});
    for (std::size_t extra = 3; nodes.size() < 4; ++extra) {
      if (hi + extra < n) nodes.push_back(hi + extra);
      if (nodes.size() < 4 && lo >= extra) nodes.push_back(lo - extra);
      if (extra > n) {
        throw IdentificationError("extend_by_continuity",
                                  "not enough clean grid points to interpolate");
      }
    }
    std::array<double, 4> xs{};
    std::array<cplx, 4> ys{};
    for (std::size_t j = 0; j < 4; ++j) {
      xs[j] = grid.s(nodes[j]);
      ys[j] = values[nodes[j]];
    }
    for (std::size_t i = lo; i <= hi; ++i) {
      const double x = grid.s(i);
      cplx acc{0.0, 0.0};
      for (std::size_t j = 0; j < 4; ++j) {
        double basis = 1.0;
        for (std::size_t m = 0; m < 4; ++m) {
          if (m != j) basis *= (x - xs[m]) / (xs[j] - xs[m]);
        }
        acc += basis * ys[j];
      }
      values[i] = acc;
    }
  }
}

ComplexCurve extend_by_continuity(const ComplexCurve& curve, const ZeroSet& masked) {
  ComplexCurve out = curve;
  if (masked.empty()) return out;
  fill_windows(curve.grid(), out.values(), mask_windows(curve.grid(), masked));
  return out;
}

}  // namespace dyadic
