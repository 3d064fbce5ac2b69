// dyadic: simulate, identify, deconvolve and report for the dyadic
// error-components model y_ij = c + alpha_i + eta_j + eps_ij.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dyadic/commands.hpp"

namespace {

void add_config_flags(CLI::App* app, dyadic::cli::ConfigOverrides& o) {
  app->add_option("--c", o.c, "Intercept c");
  app->add_option("--alpha-kind", o.alpha_kind, "Law of alpha");
  app->add_option("--alpha-scale", o.alpha_scale, "Scale of alpha");
  app->add_option("--eta-kind", o.eta_kind, "Law of eta");
  app->add_option("--eta-scale", o.eta_scale, "Scale of eta");
  app->add_option("--eps-kind", o.eps_kind, "Law of eps");
  app->add_option("--eps-scale", o.eps_scale, "Scale of eps");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dyadic::cli;

  CLI::App app{"Identification of the component laws in a dyadic error-components model"};
  app.require_subcommand(1);
  app.footer(
      "Laws: normal, laplace, uniform_symmetric, two_point_symmetric, shifted_exponential.\n"
      "Config files are JSON: {\"c\": 0, \"alpha\": {\"kind\": \"laplace\", \"scale\": 1}, ...}.");

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Draw triples (y_ij, y_kj, y_il)");
  simulate->add_option("--config", sim.config, "Model config (JSON)");
  add_config_flags(simulate, sim.overrides);
  simulate->add_option("-n,--n", sim.n, "Number of replicates")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Seed")->capture_default_str();
  simulate->add_option("-o,--out", sim.out, "Samples CSV")->capture_default_str();

  IdentifyOptions id;
  auto* identify = app.add_subcommand("identify", "Identify the CFs of alpha, eta and eps");
  auto* samples_opt = identify->add_option("--samples", id.samples, "Samples CSV");
  auto* oracle_opt =
      identify->add_option("--oracle", id.oracle, "Config whose closed-form slices are used");
  samples_opt->excludes(oracle_opt);
  identify->add_option("--truth", id.truth, "Config to compare against (default: the samples sidecar)");
  add_config_flags(identify, id.overrides);
  identify->add_option("--s-max", id.s_max, "Frequency grid half width")->capture_default_str();
  identify->add_option("--spacing", id.spacing, "Frequency grid spacing")->capture_default_str();
  identify->add_option("--deltas", id.deltas, "Excision radii, decreasing")->delimiter(',');
  identify->add_flag("--absolute-deltas", id.absolute_deltas,
                     "Deltas are absolute, not multiples of the singular gap");
  identify->add_option("--extrapolation", id.extrapolation, "richardson or last_value")
      ->capture_default_str();
  identify->add_option("--convergence-tol", id.convergence_tol)->capture_default_str();
  identify->add_option("--probe-offset", id.probe_offset)->capture_default_str();
  identify->add_flag("--negative-axis-product", id.negative_axis_product,
                     "Rebuild s < 0 by the product formula instead of symmetry");
  identify->add_option("--rel-threshold", id.rel_threshold, "Zero detection threshold")
      ->capture_default_str();
  identify->add_option("--neighborhood", id.neighborhood)->capture_default_str();
  identify->add_option("--classify-window", id.classify_window)->capture_default_str();
  identify->add_option("--blowup-factor", id.blowup_factor)->capture_default_str();
  identify->add_option("--eps-floor", id.eps_floor)->capture_default_str();
  identify->add_option("--eps-validation-tol", id.eps_validation_tol);
  identify->add_option("-o,--out-dir", id.out_dir, "Output directory")->capture_default_str();

  DeconvolveOptions dec;
  auto* deconvolve = app.add_subcommand("deconvolve", "Invert a CF curve to a density");
  deconvolve->add_option("curve", dec.curve, "Curve CSV (s,re,im)")->required();
  deconvolve->add_option("--cutoff", dec.cutoff)->capture_default_str();
  deconvolve->add_option("--window", dec.window, "sharp or cosine_taper")->capture_default_str();
  deconvolve->add_option("--x-half-width", dec.x_half_width)->capture_default_str();
  deconvolve->add_option("--x-spacing", dec.x_spacing)->capture_default_str();
  deconvolve->add_option("--truth", dec.truth, "Config to score against");
  deconvolve->add_option("--component", dec.component, "alpha, eta or eps");
  add_config_flags(deconvolve, dec.overrides);
  deconvolve->add_option("-o,--out", dec.out, "Density CSV")->capture_default_str();

  std::string run_dir;
  auto* report = app.add_subcommand("report", "Summarize a run directory");
  report->add_option("run_dir", run_dir)->required();

  CLI11_PARSE(app, argc, argv);

  if (simulate->parsed()) return cmd_simulate(sim, std::cout, std::cerr);
  if (identify->parsed()) return cmd_identify(id, std::cout, std::cerr);
  if (deconvolve->parsed()) return cmd_deconvolve(dec, std::cout, std::cerr);
  return cmd_report(run_dir, std::cout, std::cerr);
}
