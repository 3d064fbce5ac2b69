#include "dyadic/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dyadic {

namespace {

constexpr struct {
  DistKind kind;
  std::string_view name;
} kDistNames[] = {
    {DistKind::normal, "normal"},
    {DistKind::laplace, "laplace"},
    {DistKind::uniform_symmetric, "uniform_symmetric"},
    {DistKind::two_point_symmetric, "two_point_symmetric"},
    {DistKind::shifted_exponential, "shifted_exponential"},
};

}  // namespace

std::string_view to_string(DistKind kind) {
  for (const auto& entry : kDistNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

DistKind parse_dist_kind(std::string_view name) {
  for (const auto& entry : kDistNames) {
    if (entry.name == name) return entry.kind;
  }
  throw std::invalid_argument("unknown distribution kind '" + std::string(name) +
                              "' (expected normal, laplace, uniform_symmetric, "
                              "two_point_symmetric or shifted_exponential)");
}

namespace testing {
ComponentDist point_mass() {
  ComponentDist dist;
  dist.scale_ = 0.0;
  return dist;
}
}  // namespace testing

ComponentDist::ComponentDist(DistKind kind, double scale) : kind_(kind), scale_(scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    std::ostringstream msg;
    msg << "scale of " << to_string(kind) << " must be positive and finite, got " << scale;
    throw std::invalid_argument(msg.str());
  }
}

double ComponentDist::variance() const noexcept {
  const double a = scale_;
  switch (kind_) {
    case DistKind::normal:
      return a * a;
    case DistKind::laplace:
      return 2.0 * a * a;
    case DistKind::uniform_symmetric:
      return a * a / 3.0;
    case DistKind::two_point_symmetric:
      return a * a;
    case DistKind::shifted_exponential:
      return a * a;
  }
  return 0.0;
}

std::string describe(const ComponentDist& dist) {
  if (dist.degenerate()) return "point_mass(0)";
  std::ostringstream out;
  out << to_string(dist.kind()) << '(' << dist.scale() << ')';
  return out.str();
}

SampleSet::SampleSet(std::vector<TripleSample> triples, std::uint64_t seed,
                     std::optional<ModelConfig> config)
    : triples_(std::move(triples)), seed_(seed), config_(std::move(config)) {
  if (triples_.empty()) throw std::invalid_argument("sample set must hold at least one triple");
  for (std::size_t m = 0; m < triples_.size(); ++m) {
    const auto& t = triples_[m];
    if (!std::isfinite(t.y_ij) || !std::isfinite(t.y_kj) || !std::isfinite(t.y_il)) {
      throw std::invalid_argument("non-finite value in triple " + std::to_string(m));
    }
  }
}

std::vector<double> SampleSet::column(Column which) const {
  std::vector<double> out;
  out.reserve(triples_.size());
  for (const auto& t : triples_) {
    switch (which) {
      case Column::y_ij:
        out.push_back(t.y_ij);
        break;
      case Column::y_kj:
        out.push_back(t.y_kj);
        break;
      case Column::y_il:
        out.push_back(t.y_il);
        break;
    }
  }
  return out;
}

FreqGrid::FreqGrid(double s_max, std::size_t n_points) : s_max_(s_max), n_points_(n_points) {
  if (!(s_max > 0.0) || !std::isfinite(s_max)) {
    throw std::invalid_argument("grid half-width s_max must be positive");
  }
  if (n_points < 3 || n_points % 2 == 0) {
    throw std::invalid_argument("grid needs an odd number of points >= 3, got " +
                                std::to_string(n_points));
  }
  spacing_ = 2.0 * s_max / static_cast<double>(n_points - 1);
}

FreqGrid FreqGrid::from_spacing(double s_max, double spacing) {
  if (!(spacing > 0.0) || !(s_max > 0.0)) {
    throw std::invalid_argument("grid spacing and s_max must be positive");
  }
  const auto half = static_cast<std::size_t>(std::llround(s_max / spacing));
  return FreqGrid(s_max, 2 * std::max<std::size_t>(half, 1) + 1);
}

std::vector<double> FreqGrid::points() const {
  std::vector<double> out(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) out[i] = s(i);
  return out;
}

std::size_t FreqGrid::nearest(double s) const noexcept {
  const double pos = s / spacing_ + static_cast<double>(origin());
  if (!(pos > 0.0)) return 0;
  const auto idx = static_cast<std::size_t>(std::llround(pos));
  return std::min(idx, n_points_ - 1);
}

std::size_t FreqGrid::cell(double s) const noexcept {
  const double pos = s / spacing_ + static_cast<double>(origin());
  if (!(pos > 0.0)) return 0;
  auto idx = static_cast<std::size_t>(std::floor(pos));
  idx = std::min(idx, n_points_ - 2);
  // floor() can land one cell too far right when pos is a hair below an integer.
  if (idx > 0 && this->s(idx) > s) --idx;
  return idx;
}

ComplexCurve::ComplexCurve(FreqGrid grid, std::vector<cplx> values, CurveKind kind)
    : grid_(std::move(grid)), values_(std::move(values)), kind_(kind) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("curve has " + std::to_string(values_.size()) +
                                " values for a grid of " + std::to_string(grid_.size()));
  }
}

cplx ComplexCurve::at(double s) const {
  const double h = grid_.spacing();
  if (std::abs(s) > grid_.s_max() + 1e-9 * h) {
    throw std::out_of_range("curve evaluated outside its grid");
  }
  const std::size_t i = grid_.cell(s);
  const double w = std::clamp((s - grid_.s(i)) / h, 0.0, 1.0);
  return values_[i] + (values_[i + 1] - values_[i]) * w;
}

double CfValidation::max_violation() const noexcept {
  return std::max({origin_violation, modulus_violation, hermitian_violation});
}

CfValidation validate_cf_curve(const ComplexCurve& curve, double tol) {
  if (curve.kind() != CurveKind::characteristic) {
    throw std::invalid_argument("validate_cf_curve: derivative curves carry no CF invariants");
  }
  const auto& grid = curve.grid();
  CfValidation report;
  report.tolerance = tol;
  report.origin_violation = std::abs(curve[grid.origin()] - 1.0);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    report.modulus_violation = std::max(report.modulus_violation, std::abs(curve[i]) - 1.0);
    report.hermitian_violation = std::max(
        report.hermitian_violation, std::abs(curve[grid.mirror(i)] - std::conj(curve[i])));
  }
  report.passed = report.max_violation() <= tol;
  return report;
}

double sup_distance(const ComplexCurve& a, const ComplexCurve& b, double limit) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("sup_distance: grid mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.grid().s(i)) > limit + 1e-12) continue;
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace dyadic
