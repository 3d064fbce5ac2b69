#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dyadic/analytic.hpp"

using namespace dyadic;
using std::numbers::pi;

namespace {

const ComponentDist kAll[] = {
    ComponentDist(DistKind::normal, 1.3),          ComponentDist(DistKind::laplace, 0.7),
    ComponentDist(DistKind::uniform_symmetric, 2), ComponentDist(DistKind::two_point_symmetric, 1),
    ComponentDist(DistKind::shifted_exponential, 1.5),
};

// E exp(isX) by composite Simpson against the density on [lo, hi].
cplx quadrature_cf(const ComponentDist& d, double s, double lo, double hi) {
  const int n = 20000;
  const double h = (hi - lo) / n;
  cplx acc = 0;
  for (int k = 0; k <= n; ++k) {
    const double x = lo + k * h;
    const double w = (k == 0 || k == n) ? 1 : (k % 2 ? 4 : 2);
    acc += w * density_value(d, x) * std::polar(1.0, s * x);
  }
  return acc * h / 3.0;
}

}  // namespace

TEST_SUITE("analytic") {
  TEST_CASE("every law has value 1 and derivative 0 at the origin") {
    for (const auto& d : kAll) {
      CHECK(cf_value(d, 0.0) == cplx{1.0, 0.0});
      CHECK(std::abs(cf_derivative_value(d, 0.0)) < 1e-15);
    }
  }

  TEST_CASE("closed forms agree with quadrature against the densities") {
    CHECK(std::abs(cf_value(ComponentDist(), 2.0) - std::exp(-2.0)) < 1e-15);
    CHECK(std::abs(quadrature_cf(ComponentDist(), 2.0, -12, 12) - cf_value(ComponentDist(), 2.0)) <
          1e-10);
    const ComponentDist lap(DistKind::laplace, 0.7);
    CHECK(std::abs(quadrature_cf(lap, 1.1, -40, 40) - cf_value(lap, 1.1)) < 1e-8);
    const ComponentDist se(DistKind::shifted_exponential, 1.5);
    CHECK(std::abs(quadrature_cf(se, 0.8, -1.5, 60) - cf_value(se, 0.8)) < 1e-8);
  }

  TEST_CASE("uniform zero at pi with nonzero derivative") {
    const ComponentDist u(DistKind::uniform_symmetric, 1.0);
    CHECK(std::abs(cf_value(u, pi)) < 1e-15);
    CHECK(cf_derivative_value(u, pi).real() == doctest::Approx(-1.0 / pi).epsilon(1e-12));
  }

  TEST_CASE("derivatives match central differences") {
    const double step = 1e-5;
    for (const auto& d : kAll) {
      for (double s : {-2.3, -0.4, 1e-4, 1.0, 2.7}) {
        const cplx fd = (cf_value(d, s + step) - cf_value(d, s - step)) / (2 * step);
        CHECK(std::abs(fd - cf_derivative_value(d, s)) < 1e-6);
      }
    }
  }

  TEST_CASE("sinc branch is smooth through the series cut-over") {
    const ComponentDist u(DistKind::uniform_symmetric, 1.0);
    for (double s : {1e-9, 1e-5, 1e-3, 2e-2}) {
      CHECK(cf_value(u, s).real() == doctest::Approx(std::sin(s) / s).epsilon(1e-14));
    }
  }

  TEST_CASE("densities") {
    CHECK(density_value(ComponentDist(), 0.0) == doctest::Approx(1 / std::sqrt(2 * pi)));
    CHECK_THROWS_AS(density_value(ComponentDist(DistKind::two_point_symmetric, 1), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(density_value(testing::point_mass(), 0.0), std::invalid_argument);
    CHECK(density_support(ComponentDist(DistKind::uniform_symmetric, 2)).second == 2.0);
  }

  TEST_CASE("phi_Y slices") {
    const FreqGrid g(4.0, 801);
    SUBCASE("all-normal slice is exp(-3 r^2 / 2)") {
      const auto sl = compose_phi_Y_slices({}, g);
      for (std::size_t i = 0; i < g.size(); i += 37) {
        CHECK(std::abs(sl.curve_00r[i] - std::exp(-1.5 * g.s(i) * g.s(i))) < 1e-15);
      }
      CHECK(std::abs(sl.dcurve_00r[g.origin()]) == 0.0);
    }
    SUBCASE("uniform alpha: denominator vanishes at pi, numerator does not") {
      ModelConfig cfg;
      cfg.alpha = ComponentDist(DistKind::uniform_symmetric, 1.0);
      CHECK(std::abs(joint_cf(cfg, 0, 0, pi)) < 1e-15);
      CHECK(joint_cf_ds(cfg, 0, 0, pi).real() ==
            doctest::Approx(std::exp(-pi * pi) * (-1 / pi)).epsilon(1e-10));
    }
    SUBCASE("the joint derivative matches a finite difference in s") {
      ModelConfig cfg{0.0, ComponentDist(DistKind::laplace, 1), ComponentDist(DistKind::uniform_symmetric, 1),
                      ComponentDist(DistKind::shifted_exponential, 0.5)};
      const double h = 1e-5;
      for (double r : {-1.7, 0.3, 2.2}) {
        const cplx fd = (joint_cf(cfg, h, 0.4, r) - joint_cf(cfg, -h, 0.4, r)) / (2 * h);
        CHECK(std::abs(fd - joint_cf_ds(cfg, 0.0, 0.4, r)) < 1e-7);
      }
    }
  }

  TEST_CASE("analytic curves pass validation at 1e-12") {
    const FreqGrid g(10.0, 2001);
    for (const auto& d : kAll) CHECK(validate_cf_curve(analytic_cf(d, g), 1e-12).passed);
  }
}
