#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dyadic/analytic.hpp"
#include "dyadic/model.hpp"

using namespace dyadic;

TEST_SUITE("model") {
  TEST_CASE("dist kinds round-trip through their names") {
    for (auto k : {DistKind::normal, DistKind::laplace, DistKind::uniform_symmetric,
                   DistKind::two_point_symmetric, DistKind::shifted_exponential}) {
      CHECK(parse_dist_kind(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_dist_kind("cauchy"), std::invalid_argument);
  }

  TEST_CASE("component laws reject bad scales") {
    CHECK_THROWS_AS(ComponentDist(DistKind::normal, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ComponentDist(DistKind::normal, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ComponentDist(DistKind::laplace, NAN), std::invalid_argument);
    CHECK(testing::point_mass().degenerate());
    CHECK(ComponentDist(DistKind::laplace, 2.0).variance() == doctest::Approx(8.0));
    CHECK(ComponentDist(DistKind::uniform_symmetric, 3.0).variance() == doctest::Approx(3.0));
  }

  TEST_CASE("sample sets are nonempty and finite") {
    CHECK_THROWS_AS(SampleSet({}), std::invalid_argument);
    CHECK_THROWS_AS(SampleSet({{1.0, INFINITY, 0.0}}), std::invalid_argument);
    const SampleSet s({{1, 2, 3}, {4, 5, 6}}, 7);
    CHECK(s.column(Column::y_kj) == std::vector<double>{2, 5});
    CHECK(s.seed() == 7);
  }

  TEST_CASE("frequency grid is symmetric and contains 0") {
    const FreqGrid g(3.0, 601);
    CHECK(g.spacing() == doctest::Approx(0.01));
    CHECK(g.s(g.origin()) == 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.s(i) == -g.s(g.mirror(i)));
    CHECK(g.nearest(0.004) == g.origin());
    CHECK(g.nearest(100.0) == g.size() - 1);
    CHECK(g.cell(3.0) == g.size() - 2);
    CHECK_THROWS_AS(FreqGrid(3.0, 600), std::invalid_argument);
    CHECK_THROWS_AS(FreqGrid(-1.0, 11), std::invalid_argument);
    CHECK(FreqGrid::from_spacing(5.0, 0.01).size() == 1001);
  }

  TEST_CASE("validate_cf_curve") {
    const FreqGrid g(4.0, 401);
    SUBCASE("constant 1 passes") {
      const ComplexCurve one(g, std::vector<cplx>(g.size(), 1.0));
      CHECK(validate_cf_curve(one, 1e-12).passed);
    }
    SUBCASE("standard normal passes") {
      CHECK(validate_cf_curve(analytic_cf(ComponentDist(), g), 1e-12).passed);
    }
    SUBCASE("a value of 1.2 fails the modulus check by 0.2") {
      auto c = analytic_cf(ComponentDist(), g);
      c[300] = 1.2;
      const auto v = validate_cf_curve(c, 0.1);
      CHECK_FALSE(v.passed);
      CHECK(v.modulus_violation == doctest::Approx(0.2));
    }
    SUBCASE("derivative curves are exempt") {
      CHECK_THROWS_AS(validate_cf_curve(analytic_cf_deriv(ComponentDist(), g), 0.1),
                      std::invalid_argument);
    }
  }

  TEST_CASE("curve interpolation and distance") {
    const FreqGrid g(1.0, 3);
    const ComplexCurve c(g, {cplx{0, 0}, cplx{1, 0}, cplx{0, 2}});
    CHECK(c.at(0.5) == cplx{0.5, 1.0});
    CHECK_THROWS(c.at(1.5));
    const ComplexCurve d(g, {cplx{0, 0}, cplx{1, 0}, cplx{0, 0}});
    CHECK(sup_distance(c, d) == doctest::Approx(2.0));
    CHECK(sup_distance(c, d, 0.5) == 0.0);
  }
}
