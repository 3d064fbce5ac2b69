#include "dyadic/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "dyadic/analytic.hpp"
#include "dyadic/deconvolution.hpp"
#include "dyadic/error.hpp"
#include "dyadic/identification.hpp"
#include "dyadic/io.hpp"
#include "dyadic/simulator.hpp"
#include "dyadic/svg.hpp"

namespace dyadic::cli {

using io::json;

bool ConfigOverrides::any() const noexcept {
  return c || alpha_kind || alpha_scale || eta_kind || eta_scale || eps_kind || eps_scale;
}

namespace {

ComponentDist override_component(const ComponentDist& base, const std::optional<std::string>& kind,
                                 const std::optional<double>& scale) {
  if (!kind && !scale) return base;
  return ComponentDist(kind ? parse_dist_kind(*kind) : base.kind(), scale ? *scale : base.scale());
}

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c"};

std::string fixed(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct NamedCurve {
  std::string name;  // alpha, eta, epsilon
  const ComplexCurve* curve;
};

const ComponentDist& truth_component(const ModelConfig& config, const std::string& name) {
  if (name == "alpha") return config.alpha;
  if (name == "eta") return config.eta;
  if (name == "eps" || name == "epsilon") return config.eps;
  throw std::invalid_argument("unknown component '" + name + "' (expected alpha, eta or eps)");
}

std::vector<double> column(const ComplexCurve& c, double (*f)(const cplx&)) {
  std::vector<double> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = f(c[i]);
  return out;
}

double abs_of(const cplx& v) { return std::abs(v); }
double re_of(const cplx& v) { return v.real(); }
double im_of(const cplx& v) { return v.imag(); }

}  // namespace

ModelConfig resolve_config(const std::optional<fs::path>& path, const ConfigOverrides& o) {
  ModelConfig config = path ? io::load_config(*path) : ModelConfig{};
  if (o.c) {
    if (!std::isfinite(*o.c)) throw std::invalid_argument("c must be finite");
    config.c = *o.c;
  }
  config.alpha = override_component(config.alpha, o.alpha_kind, o.alpha_scale);
  config.eta = override_component(config.eta, o.eta_kind, o.eta_scale);
  config.eps = override_component(config.eps, o.eps_kind, o.eps_scale);
  return config;
}

// ---------------------------------------------------------------------------

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.n <= 0) {
      err << "simulate: n must be a positive integer (got " << options.n << ")\n";
      return failure;
    }
    const ModelConfig config = resolve_config(options.config, options.overrides);
    const auto n = static_cast<std::size_t>(options.n);
    const SampleSet samples = sample_components(config, n, options.seed);

    const auto y_ij = samples.column(Column::y_ij);
    const auto y_kj = samples.column(Column::y_kj);
    const auto y_il = samples.column(Column::y_il);
    auto mean = [](const std::vector<double>& v) {
      double s = 0.0;
      for (double x : v) s += x;
      return s / static_cast<double>(v.size());
    };
    auto cov = [&](const std::vector<double>& a, const std::vector<double>& b) {
      const double ma = mean(a), mb = mean(b);
      double s = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - ma) * (b[i] - mb);
      return s / static_cast<double>(a.size());
    };

    json moments = {
        {"mean", {{"y_ij", mean(y_ij)}, {"y_kj", mean(y_kj)}, {"y_il", mean(y_il)}}},
        {"variance", {{"y_ij", cov(y_ij, y_ij)}, {"y_kj", cov(y_kj, y_kj)}, {"y_il", cov(y_il, y_il)}}},
        {"cov_y_ij_y_il", cov(y_ij, y_il)},
        {"cov_y_ij_y_kj", cov(y_ij, y_kj)},
    };
    json sidecar = {{"config", io::config_to_json(config)},
                    {"seed", options.seed},
                    {"n", n},
                    {"columns", {"y_ij", "y_kj", "y_il"}},
                    {"moments", moments}};

    if (options.out.has_parent_path()) fs::create_directories(options.out.parent_path());
    io::write_samples_csv(options.out, samples);
    io::write_json(io::sidecar_path(options.out), sidecar);

    out << "wrote " << n << " triples to " << options.out.string() << " (seed " << options.seed
        << ")\n";
    out << "  mean     y_ij " << fixed(mean(y_ij), 4) << "  y_kj " << fixed(mean(y_kj), 4)
        << "  y_il " << fixed(mean(y_il), 4) << "   (c = " << config.c << ")\n";
    out << "  variance y_ij " << fixed(cov(y_ij, y_ij), 4) << "  y_kj " << fixed(cov(y_kj, y_kj), 4)
        << "  y_il " << fixed(cov(y_il, y_il), 4) << "   (model "
        << fixed(config.alpha.variance() + config.eta.variance() + config.eps.variance(), 4)
        << ")\n";
    out << "  cov(y_ij, y_il) " << fixed(cov(y_ij, y_il), 4) << " (var alpha "
        << fixed(config.alpha.variance(), 4) << ")  cov(y_ij, y_kj) " << fixed(cov(y_ij, y_kj), 4)
        << " (var eta " << fixed(config.eta.variance(), 4) << ")\n";
    return ok;
  } catch (const std::exception& e) {
    err << "simulate: " << e.what() << '\n';
    return failure;
  }
}

// ---------------------------------------------------------------------------

namespace {

json identify_effective(const IdentifyOptions& o, const FreqGrid& grid, double eps_tol,
                        const std::optional<ModelConfig>& model, const Slices* slices) {
  json j = {
      {"mode", o.oracle ? "oracle" : "samples"},
      {"input", o.oracle ? o.oracle->generic_string() : o.samples->generic_string()},
      {"grid", {{"s_max", grid.s_max()}, {"spacing", grid.spacing()}, {"n_points", grid.size()}}},
      {"deltas", o.deltas},
      {"absolute_deltas", o.absolute_deltas},
      {"extrapolation", o.extrapolation},
      {"convergence_tol", o.convergence_tol},
      {"probe_offset", o.probe_offset},
      {"negative_axis_product", o.negative_axis_product},
      {"rel_threshold", o.rel_threshold},
      {"neighborhood", o.neighborhood},
      {"classify_window", o.classify_window},
      {"blowup_factor", o.blowup_factor},
      {"eps_floor", o.eps_floor},
      {"eps_validation_tol", eps_tol},
  };
  if (o.truth) j["truth"] = o.truth->generic_string();
  if (model) j["model"] = io::config_to_json(*model);
  if (slices) {
    j["n_samples"] = slices->n_samples;
    j["noise_floor"] = slices->noise_floor;
  }
  return j;
}

svg::Plot curve_plot(const std::string& name, const ComplexCurve& c, const ComplexCurve* truth) {
  svg::Plot p;
  p.title = "identified CF of " + name;
  p.x_label = "s";
  p.y_label = "phi(s)";
  const auto s = c.grid().points();
  p.series.push_back({"Re", s, column(c, re_of), kColors[0], false});
  p.series.push_back({"Im", s, column(c, im_of), kColors[1], false});
  if (truth) p.series.push_back({"Re (truth)", s, column(*truth, re_of), "#000000", true});
  return p;
}

}  // namespace

int cmd_identify(const IdentifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.samples.has_value() == o.oracle.has_value()) {
    err << "identify: give exactly one of --samples or --oracle\n";
    return failure;
  }

  // Everything that can fail on bad input happens before the first write.
  std::optional<Slices> slices;
  std::optional<ModelConfig> truth;
  std::optional<FreqGrid> grid;
  StageOptions stage;
  EpsilonOptions eps;
  try {
    grid = FreqGrid::from_spacing(o.s_max, o.spacing);
    if (o.oracle) {
      truth = resolve_config(o.oracle, o.overrides);
      slices = oracle_slices(*truth, *grid);
    } else {
      if (!fs::exists(*o.samples)) throw Error("samples file '" + o.samples->string() + "' not found");
      const auto samples = io::read_samples_csv(*o.samples);
      slices = estimate_slices(samples, *grid);
      truth = samples.config();
    }
    if (o.truth) {
      truth = resolve_config(o.truth, o.overrides);
    } else if (o.samples && o.overrides.any()) {
      throw std::invalid_argument("config overrides need --oracle or --truth");
    }

    stage.rel_threshold = o.rel_threshold;
    stage.neighborhood = o.neighborhood;
    stage.classify_window = o.classify_window;
    stage.blowup_factor = o.blowup_factor;
    stage.schedule.deltas = o.deltas;
    stage.schedule.relative_to_gap = !o.absolute_deltas;
    stage.schedule.extrapolation = parse_extrapolation(o.extrapolation);
    stage.schedule.validate();
    stage.reconstruct.negative_axis_product = o.negative_axis_product;
    stage.reconstruct.convergence_tol = o.convergence_tol;
    stage.reconstruct.probe_offset = o.probe_offset;
    eps.floor = o.eps_floor;
    eps.validation_tol = o.eps_validation_tol.value_or(o.oracle ? 1e-3 : 0.1);
  } catch (const std::exception& e) {
    err << "identify: " << e.what() << '\n';
    return failure;
  }

  const json effective = identify_effective(o, *grid, eps.validation_tol,
                                            o.oracle ? truth : std::nullopt, &*slices);
  const fs::path diag_path = o.out_dir / "diagnostics.json";
  try {
    fs::create_directories(o.out_dir);
  } catch (const std::exception& e) {
    err << "identify: " << e.what() << '\n';
    return failure;
  }

  std::optional<Identification> id;
  try {
    id = identify_all(*slices, stage, eps);
  } catch (const IdentificationError& e) {
    json diag = {{"effective_config", effective},
                 {"error", {{"stage", e.stage()}, {"detail", e.detail()}}},
                 {"zeros", json::array()},
                 {"singular", json::array()},
                 {"delta_trace", json::array()},
                 {"convergence_flags", json::array()}};
    try {
      io::write_json(diag_path, diag);
    } catch (const std::exception& w) {
      err << "identify: " << w.what() << '\n';
    }
    err << "identify: stage '" << e.stage() << "' failed: " << e.detail() << "\n"
        << "  diagnostics: " << diag_path.string() << '\n';
    return stage_failure;
  }

  try {
    json zeros = json::array(), singular = json::array(), traces = json::array(),
         flags = json::array();
    for (const StageResult* s : {&id->alpha, &id->eta}) {
      for (auto& e : io::zero_entries(*s)) zeros.push_back(e);
      for (auto& e : io::singular_entries(*s)) singular.push_back(e);
      for (auto& e : io::trace_entries(*s)) traces.push_back(e);
      flags.push_back(io::convergence_entry(*s));
    }
    json masked = json::array();
    for (const auto& z : id->epsilon.masked.points) {
      masked.push_back({{"location", z.location}, {"radius", z.radius}});
    }
    flags.push_back({{"stage", "epsilon"},
                     {"converged", true},
                     {"validation_passed", id->epsilon.validation.passed}});

    const std::vector<NamedCurve> curves = {{"alpha", &id->alpha.curve()},
                                            {"eta", &id->eta.curve()},
                                            {"epsilon", &id->epsilon.curve}};
    json validation;
    for (const auto& c : curves) {
      validation[c.name] = io::validation_to_json(validate_cf_curve(*c.curve, eps.validation_tol));
    }

    json diag = {{"effective_config", effective},
                 {"zeros", zeros},
                 {"singular", singular},
                 {"delta_trace", traces},
                 {"convergence_flags", flags},
                 {"epsilon", {{"masked", masked}, {"warnings", id->epsilon.warnings}}},
                 {"validation", validation}};

    std::vector<ComplexCurve> truth_curves;
    if (truth) {
      json errors;
      for (const auto& c : curves) {
        truth_curves.push_back(analytic_cf(truth_component(*truth, c.name), *grid));
        errors[c.name] = {{"sup", sup_distance(*c.curve, truth_curves.back())},
                          {"sup_abs_s_le_2", sup_distance(*c.curve, truth_curves.back(), 2.0)}};
      }
      diag["errors_vs_truth"] = errors;
    }

    for (const auto& c : curves) io::write_curve_csv(o.out_dir / (c.name + ".csv"), *c.curve);
    io::write_json(diag_path, diag);

    svg::Plot overlay;
    overlay.title = "modulus of the identified CFs";
    overlay.x_label = "s";
    overlay.y_label = "|phi(s)|";
    const auto s = grid->points();
    for (std::size_t k = 0; k < curves.size(); ++k) {
      overlay.series.push_back({curves[k].name, s, column(*curves[k].curve, abs_of), kColors[k], false});
    }
    for (std::size_t k = 0; k < truth_curves.size(); ++k) {
      overlay.series.push_back(
          {curves[k].name + " (truth)", s, column(truth_curves[k], abs_of), kColors[k], true});
    }
    svg::write(o.out_dir / "cf_overlay.svg", overlay);
    for (std::size_t k = 0; k < curves.size(); ++k) {
      svg::write(o.out_dir / ("cf_" + curves[k].name + ".svg"),
                 curve_plot(curves[k].name, *curves[k].curve,
                            truth_curves.empty() ? nullptr : &truth_curves[k]));
    }

    out << "identified alpha, eta, epsilon on |s| <= " << grid->s_max() << " (" << grid->size()
        << " points) -> " << o.out_dir.string() << '\n';
    for (const StageResult* st : {&id->alpha, &id->eta}) {
      out << "  " << st->name << ": " << st->zeros.size() << " zeros, "
          << st->singular.positive.size() + st->singular.negative.size() << " singular, "
          << (st->reconstruction.converged() ? "converged" : "NOT converged") << '\n';
    }
    for (const auto& w : id->epsilon.warnings) out << "  epsilon: " << w << '\n';
    if (truth) {
      for (const auto& c : curves) {
        out << "  sup error " << c.name << ": " << sci(diag["errors_vs_truth"][c.name]["sup"].get<double>())
            << '\n';
      }
    }
    return ok;
  } catch (const std::exception& e) {
    err << "identify: " << e.what() << '\n';
    return failure;
  }
}

// ---------------------------------------------------------------------------

int cmd_deconvolve(const DeconvolveOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const ComplexCurve curve = io::read_curve_csv(o.curve);
    const Window window = parse_window(o.window);
    const SpatialGrid x_grid = SpatialGrid::symmetric(o.x_half_width, o.x_spacing);
    std::optional<ComponentDist> truth;
    if (o.truth) {
      if (o.component.empty()) throw std::invalid_argument("--truth needs --component");
      truth = truth_component(resolve_config(o.truth, o.overrides), o.component);
    }
    const DensityEstimate est = invert_cf(curve, o.cutoff, window, x_grid);
    for (const auto& w : est.warnings) err << "deconvolve: warning: " << w << '\n';

    json sidecar = {
        {"effective_config",
         {{"input", o.curve.generic_string()},
          {"cutoff", o.cutoff},
          {"window", std::string(to_string(window))},
          {"x_half_width", x_grid.x_max()},
          {"x_spacing", x_grid.spacing()},
          {"x_points", x_grid.size()}}},
        {"imag_residual", est.imag_residual},
        {"mass", est.mass},
        {"negative_mass", est.negative_mass},
        {"clipped_mass", est.clipped_mass},
        {"clipped_mass_in_range", est.mass_in_range()},
        {"input_validation", io::validation_to_json(est.validation)},
        {"warnings", est.warnings},
    };
    if (truth) {
      sidecar["effective_config"]["truth"] = o.truth->generic_string();
      sidecar["effective_config"]["component"] = o.component;
      if (truth->kind() == DistKind::two_point_symmetric || truth->degenerate()) {
        sidecar["error_vs_truth"] = nullptr;
        sidecar["warnings"].push_back("truth law has no density; not scored");
      } else {
        const auto r = density_error_report(est, *truth);
        sidecar["error_vs_truth"] = {{"sup", r.sup}, {"l1", r.l1}, {"lo", r.lo}, {"hi", r.hi}};
      }
    }

    if (o.out.has_parent_path()) fs::create_directories(o.out.parent_path());
    io::write_density_csv(o.out, est);
    io::write_json(io::sidecar_path(o.out), sidecar);

    svg::Plot plot;
    plot.title = "density from " + o.curve.filename().string();
    plot.x_label = "x";
    plot.y_label = "f(x)";
    plot.series.push_back({"estimate", est.x, est.values, kColors[0], false});
    if (truth && truth->kind() != DistKind::two_point_symmetric && !truth->degenerate()) {
      std::vector<double> f(est.x.size());
      for (std::size_t j = 0; j < f.size(); ++j) f[j] = density_value(*truth, est.x[j]);
      plot.series.push_back({"truth", est.x, f, "#000000", true});
    }
    fs::path svg_path = o.out;
    svg::write(svg_path.replace_extension(".svg"), plot);

    out << "wrote density (" << est.x.size() << " points, cutoff " << o.cutoff << ", "
        << to_string(window) << ") to " << o.out.string() << "\n  mass " << fixed(est.mass, 4)
        << ", negative mass " << fixed(est.negative_mass, 4) << '\n';
    if (sidecar.contains("error_vs_truth") && !sidecar["error_vs_truth"].is_null()) {
      out << "  L1 error " << sci(sidecar["error_vs_truth"]["l1"].get<double>()) << ", sup error "
          << sci(sidecar["error_vs_truth"]["sup"].get<double>()) << '\n';
    }
    return ok;
  } catch (const std::exception& e) {
    err << "deconvolve: " << e.what() << '\n';
    return failure;
  }
}

// ---------------------------------------------------------------------------

int cmd_report(const fs::path& run_dir, std::ostream& out, std::ostream& err) {
  try {
    if (!fs::is_directory(run_dir)) {
      err << "report: '" << run_dir.string() << "' is not a directory\n";
      return failure;
    }
    if (fs::is_empty(run_dir)) {
      err << "report: '" << run_dir.string() << "' is empty\n";
      return failure;
    }

    const std::vector<std::string> components = {"alpha", "eta", "epsilon"};
    std::vector<std::string> missing;
    auto have = [&](const std::string& name) {
      if (fs::exists(run_dir / name)) return true;
      missing.push_back(name);
      return false;
    };

    std::ostringstream md;
    md << "# Identification report\n\n";

    std::optional<json> diag;
    if (have("diagnostics.json")) diag = io::read_json(run_dir / "diagnostics.json");
    if (diag && diag->contains("effective_config")) {
      const auto& cfg = (*diag)["effective_config"];
      md << "Mode: " << cfg.value("mode", "?") << ", input `" << cfg.value("input", "?")
         << "`, grid |s| <= " << cfg["grid"].value("s_max", 0.0) << " with spacing "
         << cfg["grid"].value("spacing", 0.0) << ".\n\n";
    }
    if (diag && diag->contains("error")) {
      md << "**Identification failed** in stage `" << (*diag)["error"].value("stage", "?")
         << "`: " << (*diag)["error"].value("detail", "") << "\n\n";
    }

    md << "## Characteristic functions\n\n";
    if (have("cf_overlay.svg")) md << "![modulus overlay](cf_overlay.svg)\n\n";
    for (const auto& c : components) {
      have(c + ".csv");
      if (have("cf_" + c + ".svg")) md << "![" << c << "](cf_" << c << ".svg)\n\n";
    }

    if (diag && diag->contains("zeros")) {
      md << "## Zeros of the denominator slices\n\n";
      if ((*diag)["zeros"].empty()) {
        md << "No zeros detected.\n\n";
      } else {
        md << "| stage | location | modulus | trusted | classification |\n"
           << "|---|---|---|---|---|\n";
        const auto& zs = (*diag)["zeros"];
        const auto& vs = (*diag)["singular"];
        for (std::size_t k = 0; k < zs.size(); ++k) {
          const std::string cls = k < vs.size() ? vs[k].value("classification", "?") : "?";
          md << "| " << zs[k].value("stage", "?") << " | " << fixed(zs[k].value("location", 0.0), 6)
             << " | " << sci(zs[k].value("modulus", 0.0)) << " | "
             << (zs[k].value("trusted", false) ? "yes" : "no") << " | " << cls << " |\n";
        }
        md << '\n';
      }
    }
    if (diag && diag->contains("convergence_flags")) {
      md << "## Convergence\n\n| stage | converged | detail |\n|---|---|---|\n";
      for (const auto& f : (*diag)["convergence_flags"]) {
        std::string detail;
        if (f.contains("worst_change")) {
          detail = "bridged points " + std::to_string(f.value("bridged_points", 0)) +
                   ", worst change " + sci(f.value("worst_change", 0.0));
        } else if (f.contains("validation_passed")) {
          detail = f.value("validation_passed", false) ? "CF validation passed"
                                                       : "CF validation failed";
        }
        md << "| " << f.value("stage", "?") << " | " << (f.value("converged", false) ? "yes" : "no")
           << " | " << detail << " |\n";
      }
      md << '\n';
    }
    if (diag && diag->contains("errors_vs_truth")) {
      md << "## CF errors against the truth\n\n| component | sup | sup on abs(s) <= 2 |\n"
         << "|---|---|---|\n";
      for (const auto& c : components) {
        const auto& e = (*diag)["errors_vs_truth"][c];
        md << "| " << c << " | " << sci(e.value("sup", 0.0)) << " | "
           << sci(e.value("sup_abs_s_le_2", 0.0)) << " |\n";
      }
      md << '\n';
    }

    md << "## Densities\n\n";
    std::ostringstream density_table;
    for (const auto& c : components) {
      const std::string stem = "density_" + c;
      have(stem + ".csv");
      if (have(stem + ".svg")) md << "![density of " << c << "](" << stem << ".svg)\n\n";
      if (have(stem + ".json")) {
        const json side = io::read_json(run_dir / (stem + ".json"));
        density_table << "| " << c << " | " << side["effective_config"].value("cutoff", 0.0) << " | "
                      << side["effective_config"].value("window", "?") << " | "
                      << fixed(side.value("mass", 0.0), 4) << " | ";
        if (side.contains("error_vs_truth") && !side["error_vs_truth"].is_null()) {
          density_table << sci(side["error_vs_truth"].value("l1", 0.0)) << " | "
                        << sci(side["error_vs_truth"].value("sup", 0.0)) << " |\n";
        } else {
          density_table << "n/a | n/a |\n";
        }
      }
    }
    if (!density_table.str().empty()) {
      md << "| component | cutoff | window | mass | L1 error | sup error |\n"
         << "|---|---|---|---|---|---|\n"
         << density_table.str() << '\n';
    }

    md << "## Missing artifacts\n\n";
    if (missing.empty()) {
      md << "None.\n";
    } else {
      for (const auto& m : missing) md << "- `" << m << "`\n";
    }

    io::write_text(run_dir / "report.md", md.str());
    out << "wrote " << (run_dir / "report.md").string();
    if (!missing.empty()) out << " (" << missing.size() << " artifacts missing)";
    out << '\n';
    return ok;
  } catch (const std::exception& e) {
    err << "report: " << e.what() << '\n';
    return failure;
  }
}

}  // namespace dyadic::cli
