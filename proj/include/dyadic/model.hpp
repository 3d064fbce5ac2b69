#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyadic {

using cplx = std::complex<double>;

enum class DistKind {
  normal,
  laplace,
  uniform_symmetric,
  two_point_symmetric,
  shifted_exponential,
};

std::string_view to_string(DistKind kind);
/// Throws std::invalid_argument on an unknown name.
DistKind parse_dist_kind(std::string_view name);

class ComponentDist;

namespace testing {
/// Point mass at zero. Only reachable through this hook: public constructors
/// reject a zero scale.
ComponentDist point_mass();
}  // namespace testing

/// Law of one latent component. Every supported law has mean exactly zero:
///   normal(sigma)               N(0, sigma^2)
///   laplace(b)                  density exp(-|x|/b) / 2b
///   uniform_symmetric(a)        U[-a, a]
///   two_point_symmetric(a)      +-a with probability 1/2
///   shifted_exponential(lambda) Exp(mean lambda) - lambda
class ComponentDist {
 public:
  ComponentDist() = default;  // normal(1)
  ComponentDist(DistKind kind, double scale);

  DistKind kind() const noexcept { return kind_; }
  double scale() const noexcept { return scale_; }
  bool degenerate() const noexcept { return scale_ == 0.0; }

  double mean() const noexcept { return 0.0; }
  double variance() const noexcept;

  friend bool operator==(const ComponentDist&, const ComponentDist&) = default;

 private:
  friend ComponentDist testing::point_mass();
  DistKind kind_ = DistKind::normal;
  double scale_ = 1.0;
};

std::string describe(const ComponentDist& dist);

/// y_ij = c + alpha_i + eta_j + eps_ij. alpha_i and alpha_k share `alpha`,
/// eta_j and eta_l share `eta`, and every eps shares `eps`.
struct ModelConfig {
  double c = 0.0;
  ComponentDist alpha;
  ComponentDist eta;
  ComponentDist eps;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

struct TripleSample {
  double y_ij = 0.0;
  double y_kj = 0.0;
  double y_il = 0.0;

  friend bool operator==(const TripleSample&, const TripleSample&) = default;
};

enum class Column { y_ij, y_kj, y_il };

/// Observed triples of one connected component, one per independent replicate.
class SampleSet {
 public:
  /// Throws std::invalid_argument when empty or when any value is not finite.
  SampleSet(std::vector<TripleSample> triples, std::uint64_t seed = 0,
            std::optional<ModelConfig> config = std::nullopt);

  std::size_t size() const noexcept { return triples_.size(); }
  const std::vector<TripleSample>& triples() const noexcept { return triples_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::optional<ModelConfig>& config() const noexcept { return config_; }

  std::vector<double> column(Column which) const;

  friend bool operator==(const SampleSet&, const SampleSet&) = default;

 private:
  std::vector<TripleSample> triples_;
  std::uint64_t seed_;
  std::optional<ModelConfig> config_;
};

/// Uniform frequency grid on [-s_max, s_max] with an odd number of points, so
/// that s = 0 is an exact grid point and the grid is mirror-symmetric.
class FreqGrid {
 public:
  FreqGrid(double s_max, std::size_t n_points);
  /// n_points = 2 * round(s_max / spacing) + 1. The end points stay at +-s_max,
  /// so the realized spacing can differ slightly from the request.
  static FreqGrid from_spacing(double s_max, double spacing);

  double s_max() const noexcept { return s_max_; }
  std::size_t size() const noexcept { return n_points_; }
  double spacing() const noexcept { return spacing_; }
  std::size_t origin() const noexcept { return n_points_ / 2; }
  std::size_t mirror(std::size_t i) const noexcept { return n_points_ - 1 - i; }

  /// Exactly 0 at origin() and exactly -s(mirror(i)) elsewhere.
  double s(std::size_t i) const noexcept {
    const auto offset = static_cast<double>(i) - static_cast<double>(origin());
    return offset * spacing_;
  }
  std::vector<double> points() const;

  /// Index of the grid point nearest to s, clamped to the grid.
  std::size_t nearest(double s) const noexcept;
  /// Largest index whose point is <= s, clamped to [0, size() - 2].
  std::size_t cell(double s) const noexcept;

  friend bool operator==(const FreqGrid&, const FreqGrid&) = default;

 private:
  double s_max_;
  std::size_t n_points_;
  double spacing_;
};

enum class CurveKind {
  characteristic,  // subject to the CF invariants
  derivative,      // derivative or ratio curve, exempt
};

/// Complex values sampled on a FreqGrid.
class ComplexCurve {
 public:
  ComplexCurve(FreqGrid grid, std::vector<cplx> values,
               CurveKind kind = CurveKind::characteristic);

  const FreqGrid& grid() const noexcept { return grid_; }
  const std::vector<cplx>& values() const noexcept { return values_; }
  std::vector<cplx>& values() noexcept { return values_; }
  CurveKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return values_.size(); }

  const cplx& operator[](std::size_t i) const noexcept { return values_[i]; }
  cplx& operator[](std::size_t i) noexcept { return values_[i]; }

  /// Linear interpolation between grid points; throws outside [-s_max, s_max].
  cplx at(double s) const;

 private:
  FreqGrid grid_;
  std::vector<cplx> values_;
  CurveKind kind_;
};

/// Maximum violation of each consequence of being a CF of a real variable.
struct CfValidation {
  double origin_violation = 0.0;     // |phi(0) - 1|
  double modulus_violation = 0.0;    // max(|phi| - 1, 0)
  double hermitian_violation = 0.0;  // max |phi(-s) - conj(phi(s))|
  double tolerance = 0.0;
  bool passed = true;

  double max_violation() const noexcept;
};

/// Report-only check. Throws std::invalid_argument for derivative-tagged curves.
CfValidation validate_cf_curve(const ComplexCurve& curve, double tol);

/// Maximum |a - b| over grid points with |s| <= limit. Both curves must share a grid.
double sup_distance(const ComplexCurve& a, const ComplexCurve& b,
                    double limit = std::numeric_limits<double>::infinity());

}  // namespace dyadic
