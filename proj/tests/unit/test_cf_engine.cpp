#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dyadic/analytic.hpp"
#include "dyadic/cf_engine.hpp"
#include "dyadic/simulator.hpp"

using namespace dyadic;
using std::numbers::pi;

TEST_SUITE("cf_engine") {
  TEST_CASE("ecf of zeros is 1, of {-1, 1} is cos") {
    const auto g = FreqGrid::from_spacing(10, 0.01);
    const std::vector<double> zeros(17, 0.0), pm{-1.0, 1.0};
    const auto one = ecf(zeros, g);
    const auto c = ecf(pm, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(std::abs(one[i] - 1.0) < 1e-14);
      CHECK(std::abs(c[i] - std::cos(g.s(i))) < 1e-13);
    }
    CHECK(c[g.origin()] == cplx{1.0, 0.0});
    CHECK_THROWS_AS(ecf(std::vector<double>{}, g), std::invalid_argument);
  }

  TEST_CASE("ecf is exactly Hermitian and matches a direct sum") {
    const auto g = FreqGrid::from_spacing(6, 0.013);
    const std::vector<double> x{0.3, -1.7, 2.2, 0.05, 4.1};
    const auto c = ecf(x, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(c[g.mirror(i)] == std::conj(c[i]));
      cplx direct = 0;
      for (double v : x) direct += std::polar(1.0, g.s(i) * v);
      CHECK(std::abs(c[i] - direct / 5.0) < 1e-13);
    }
  }

  TEST_CASE("ecf of normal draws approaches exp(-s^2/2)") {
    const auto g = FreqGrid::from_spacing(3, 0.01);
    ModelConfig cfg{0.0, testing::point_mass(), testing::point_mass(), ComponentDist()};
    const auto col = sample_components(cfg, 200000, 5).column(Column::y_ij);
    CHECK(sup_distance(ecf(col, g), analytic_cf(ComponentDist(), g)) <= 0.02);
  }

  TEST_CASE("ecf_partial_first") {
    const auto g = FreqGrid::from_spacing(3, 0.01);
    const std::vector<double> x{0.3, -1.2, 0.8, 2.5, -0.1};
    SUBCASE("zero first column gives 0") {
      const auto d = ecf_partial_first(std::vector<double>(5, 0.0), x, g);
      for (const auto& v : d.values()) CHECK(std::abs(v) == 0.0);
      CHECK(d.kind() == CurveKind::derivative);
    }
    SUBCASE("same column gives the derivative of the ecf") {
      const auto d = ecf_partial_first(x, x, g);
      const double e = 1e-6;
      for (std::size_t i = 1; i + 1 < g.size(); i += 20) {
        cplx fd = 0;
        for (double v : x) fd += (std::polar(1.0, (g.s(i) + e) * v) - std::polar(1.0, (g.s(i) - e) * v));
        fd /= (2 * e * 5.0);
        CHECK(std::abs(fd - d[i]) < 1e-7);
      }
    }
    SUBCASE("errors") {
      CHECK_THROWS_AS(ecf_partial_first(x, std::vector<double>{1.0}, g), std::invalid_argument);
      CHECK_THROWS_AS(ecf_partial_first(std::vector<double>{}, std::vector<double>{}, g),
                      std::invalid_argument);
    }
    SUBCASE("simulated normal config matches the analytic slice derivative") {
      const auto s = sample_components({}, 200000, 6);
      const auto d = ecf_partial_first(centered(s.column(Column::y_ij)),
                                       centered(s.column(Column::y_il)), g);
      const auto truth = compose_phi_Y_slices({}, g).dcurve_00r;
      CHECK(sup_distance(d, truth) <= 0.03);
    }
  }

  TEST_CASE("psi_from_curves") {
    const auto g = FreqGrid::from_spacing(6, 0.01);
    SUBCASE("Gaussian gives -s") {
      const auto psi = psi_from_curves(analytic_cf_deriv(ComponentDist(), g),
                                       analytic_cf(ComponentDist(), g), {});
      for (std::size_t i = 0; i < g.size(); i += 11) CHECK(std::abs(psi.values[i] + g.s(i)) < 1e-12);
    }
    SUBCASE("unit denominator returns the numerator") {
      const auto num = analytic_cf_deriv(ComponentDist(DistKind::laplace, 1), g);
      const auto psi = psi_from_curves(num, ComplexCurve(g, std::vector<cplx>(g.size(), 1.0)), {});
      CHECK(psi.values == num.values());
    }
    SUBCASE("sinc denominator: masked at pi, blowing up next to it") {
      const ComponentDist u(DistKind::uniform_symmetric, 1);
      ZeroSet z;
      z.points = {{pi, g.nearest(pi), 0, 0, true}};
      const auto psi = psi_from_curves(analytic_cf_deriv(u, g), analytic_cf(u, g), z);
      const std::size_t k = g.nearest(pi);
      CHECK(psi.zero_mask[k]);
      CHECK(psi.values[k] == cplx{0, 0});
      CHECK(std::abs(psi.values[k - 1]) > 50.0);
      CHECK(std::abs(psi.values[k - 1]) > std::abs(psi.values[k - 10]));
    }
    SUBCASE("grid mismatch") {
      CHECK_THROWS_AS(psi_from_curves(analytic_cf(ComponentDist(), g),
                                      analytic_cf(ComponentDist(), FreqGrid(6, 11)), {}),
                      std::invalid_argument);
    }
  }
}
