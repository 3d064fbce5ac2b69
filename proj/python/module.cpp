// Python bindings. Curves cross the boundary as (s, values) numpy pairs.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyadic/analytic.hpp"
#include "dyadic/cf_engine.hpp"
#include "dyadic/deconvolution.hpp"
#include "dyadic/error.hpp"
#include "dyadic/identification.hpp"
#include "dyadic/simulator.hpp"

namespace py = pybind11;
using namespace dyadic;

namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

py::array_t<double> to_numpy(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<cplx> to_numpy(const ComplexCurve& c) {
  return py::array_t<cplx>(static_cast<py::ssize_t>(c.size()), c.values().data());
}

std::vector<double> to_vector(const RealArray& a) {
  if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
  return {a.data(), a.data() + a.size()};
}

// Rebuild the grid from its points; they must be the symmetric odd grid.
FreqGrid grid_from_points(const std::vector<double>& s) {
  if (s.size() < 3 || s.size() % 2 == 0) {
    throw std::invalid_argument("frequency grid needs an odd number (>= 3) of points");
  }
  const FreqGrid grid(s.back(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::abs(s[i] - grid.s(i)) > 1e-9 * std::max(1.0, grid.s_max())) {
      throw std::invalid_argument("frequency grid must be uniform and symmetric about 0");
    }
  }
  return grid;
}

ComplexCurve curve_from(const RealArray& s, const ComplexArray& values) {
  if (values.ndim() != 1 || values.size() != s.size()) {
    throw std::invalid_argument("s and values must be 1-d arrays of equal length");
  }
  return ComplexCurve(grid_from_points(to_vector(s)),
                      std::vector<cplx>(values.data(), values.data() + values.size()));
}

py::dict validation_dict(const CfValidation& v) {
  py::dict d;
  d["origin_violation"] = v.origin_violation;
  d["modulus_violation"] = v.modulus_violation;
  d["hermitian_violation"] = v.hermitian_violation;
  d["tolerance"] = v.tolerance;
  d["passed"] = v.passed;
  return d;
}

py::list zeros_list(const ZeroSet& zeros) {
  py::list out;
  for (const auto& z : zeros.points) {
    py::dict d;
    d["location"] = z.location;
    d["modulus"] = z.modulus;
    d["radius"] = z.radius;
    d["trusted"] = z.trusted;
    out.append(d);
  }
  return out;
}

py::dict stage_dict(const StageResult& st) {
  py::dict d;
  d["cf"] = to_numpy(st.curve());
  d["zeros"] = zeros_list(st.zeros);
  d["singular"] = st.singular.positive;
  d["bridged_points"] = st.reconstruction.bridged_points;
  d["converged"] = st.reconstruction.converged();
  d["worst_change"] = st.reconstruction.worst_change;
  return d;
}

SampleSet samples_from(const RealArray& y) {
  if (y.ndim() != 2 || y.shape(1) != 3) throw std::invalid_argument("samples must have shape (n, 3)");
  std::vector<TripleSample> t(static_cast<std::size_t>(y.shape(0)));
  const double* p = y.data();
  for (auto& row : t) {
    row = {p[0], p[1], p[2]};
    p += 3;
  }
  return SampleSet(std::move(t));
}

}  // namespace

PYBIND11_MODULE(_dyadic, m) {
  m.doc() = "Characteristic-function identification for the dyadic model y = c + alpha + eta + eps";

  static py::exception<Error> error(m, "DyadicError", PyExc_RuntimeError);
  static py::exception<IdentificationError> ident_error(m, "IdentificationError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const IdentificationError& e) {
      py::set_error(ident_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<ComponentDist>(m, "ComponentDist")
      .def(py::init([](const std::string& kind, double scale) {
             return ComponentDist(parse_dist_kind(kind), scale);
           }),
           py::arg("kind") = "normal", py::arg("scale") = 1.0)
      .def_property_readonly("kind", [](const ComponentDist& d) { return std::string(to_string(d.kind())); })
      .def_property_readonly("scale", &ComponentDist::scale)
      .def_property_readonly("variance", &ComponentDist::variance)
      .def("__repr__", [](const ComponentDist& d) { return "ComponentDist(" + describe(d) + ")"; });

  py::class_<ModelConfig>(m, "ModelConfig")
      .def(py::init([](double c, ComponentDist alpha, ComponentDist eta, ComponentDist eps) {
             return ModelConfig{c, alpha, eta, eps};
           }),
           py::arg("c") = 0.0, py::arg("alpha") = ComponentDist(), py::arg("eta") = ComponentDist(),
           py::arg("eps") = ComponentDist())
      .def_readwrite("c", &ModelConfig::c)
      .def_readwrite("alpha", &ModelConfig::alpha)
      .def_readwrite("eta", &ModelConfig::eta)
      .def_readwrite("eps", &ModelConfig::eps);

  m.def(
      "grid",
      [](double s_max, double spacing) { return to_numpy(FreqGrid::from_spacing(s_max, spacing).points()); },
      py::arg("s_max"), py::arg("spacing"), "Symmetric frequency grid with 0 as a grid point.");

  m.def(
      "simulate",
      [](const ModelConfig& config, std::size_t n, std::uint64_t seed) {
        const auto set = sample_components(config, n, seed);
        py::array_t<double> out({static_cast<py::ssize_t>(n), py::ssize_t{3}});
        auto w = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < n; ++i) {
          const auto& t = set.triples()[i];
          w(i, 0) = t.y_ij;
          w(i, 1) = t.y_kj;
          w(i, 2) = t.y_il;
        }
        return out;
      },
      py::arg("config"), py::arg("n"), py::arg("seed") = 42,
      "Draw n independent triples (y_ij, y_kj, y_il) as an (n, 3) array.");

  m.def(
      "analytic_cf",
      [](const ComponentDist& dist, const RealArray& s) {
        return to_numpy(analytic_cf(dist, grid_from_points(to_vector(s))));
      },
      py::arg("dist"), py::arg("s"));

  m.def(
      "ecf",
      [](const RealArray& x, const RealArray& s) {
        return to_numpy(ecf(to_vector(x), grid_from_points(to_vector(s))));
      },
      py::arg("x"), py::arg("s"), "Empirical CF of x on the grid s.");

  m.def(
      "ecf_partial_first",
      [](const RealArray& first, const RealArray& anchor, const RealArray& s) {
        return to_numpy(ecf_partial_first(to_vector(first), to_vector(anchor), grid_from_points(to_vector(s))));
      },
      py::arg("first"), py::arg("anchor"), py::arg("s"),
      "Empirical (1/n) sum i*first*exp(i s anchor).");

  m.def(
      "validate_cf",
      [](const RealArray& s, const ComplexArray& values, double tol) {
        return validation_dict(validate_cf_curve(curve_from(s, values), tol));
      },
      py::arg("s"), py::arg("values"), py::arg("tol") = 1e-12);

  m.def(
      "identify",
      [](std::optional<ModelConfig> oracle, std::optional<RealArray> samples, double s_max, double spacing,
         bool negative_axis_product, const std::string& extrapolation) {
        if (oracle.has_value() == samples.has_value()) {
          throw std::invalid_argument("pass exactly one of oracle= or samples=");
        }
        const auto g = FreqGrid::from_spacing(s_max, spacing);
        std::optional<SampleSet> data;
        if (samples) data.emplace(samples_from(*samples));
        StageOptions stage;
        stage.reconstruct.negative_axis_product = negative_axis_product;
        stage.schedule.extrapolation = parse_extrapolation(extrapolation);
        EpsilonOptions eps;
        if (oracle) eps.validation_tol = 1e-3;
        py::gil_scoped_release release_for_compute;
        const Slices slices = oracle ? oracle_slices(*oracle, g) : estimate_slices(*data, g);
        const auto result = identify_all(slices, stage, eps);
        const Identification* id = &result;
        py::gil_scoped_acquire reacquire;
        py::dict out;
        out["s"] = to_numpy(g.points());
        out["alpha"] = stage_dict(id->alpha);
        out["eta"] = stage_dict(id->eta);
        py::dict e;
        e["cf"] = to_numpy(id->epsilon.curve);
        e["masked"] = zeros_list(id->epsilon.masked);
        e["warnings"] = id->epsilon.warnings;
        e["validation"] = validation_dict(id->epsilon.validation);
        out["epsilon"] = e;
        out["noise_floor"] = slices.noise_floor;
        return out;
      },
      py::kw_only(), py::arg("oracle") = py::none(), py::arg("samples") = py::none(), py::arg("s_max") = 4.0,
      py::arg("spacing") = 0.01, py::arg("negative_axis_product") = false,
      py::arg("extrapolation") = "richardson",
      "Identify the CFs of alpha, eta and eps from an (n, 3) sample array or an oracle config.");

  m.def(
      "invert_cf",
      [](const RealArray& s, const ComplexArray& values, double cutoff, const std::string& window,
         double x_half_width, double x_spacing) {
        const auto est = invert_cf(curve_from(s, values), cutoff, parse_window(window),
                                   SpatialGrid::symmetric(x_half_width, x_spacing));
        py::dict d;
        d["x"] = to_numpy(est.x);
        d["density"] = to_numpy(est.values);
        d["mass"] = est.mass;
        d["negative_mass"] = est.negative_mass;
        d["imag_residual"] = est.imag_residual;
        d["warnings"] = est.warnings;
        return d;
      },
      py::arg("s"), py::arg("values"), py::arg("cutoff"), py::arg("window") = "cosine_taper",
      py::arg("x_half_width") = 8.0, py::arg("x_spacing") = 0.01, "Fourier inversion of a CF curve.");

  m.def("density", &density_value, py::arg("dist"), py::arg("x"), "Closed-form density; raises for laws without one.");
}
