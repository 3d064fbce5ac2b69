#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dyadic/model.hpp"

namespace dyadic::cli {

namespace fs = std::filesystem;

/// Exit codes shared by every command.
enum Exit : int { ok = 0, failure = 1, stage_failure = 2 };

/// One optional value per config key; set values replace the file's.
struct ConfigOverrides {
  std::optional<double> c;
  std::optional<std::string> alpha_kind;
  std::optional<double> alpha_scale;
  std::optional<std::string> eta_kind;
  std::optional<double> eta_scale;
  std::optional<std::string> eps_kind;
  std::optional<double> eps_scale;

  bool any() const noexcept;
};

/// Config file (if any) with overrides applied. Throws ParseError or
/// std::invalid_argument.
ModelConfig resolve_config(const std::optional<fs::path>& path, const ConfigOverrides& overrides);

struct SimulateOptions {
  std::optional<fs::path> config;
  ConfigOverrides overrides;
  long long n = 1000;
  std::uint64_t seed = 42;
  fs::path out = "samples.csv";
};

/// Writes the samples CSV and its JSON sidecar, prints summary moments.
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

struct IdentifyOptions {
  std::optional<fs::path> samples;
  std::optional<fs::path> oracle;  // config whose closed-form slices replace the ECFs
  std::optional<fs::path> truth;   // config overlaid on the plots and scored against
  ConfigOverrides overrides;       // applied to the oracle or truth config

  double s_max = 4.0;
  double spacing = 0.01;

  std::vector<double> deltas{0.2, 0.1, 0.05, 0.025};
  bool absolute_deltas = false;
  std::string extrapolation = "richardson";
  double convergence_tol = 1e-3;
  double probe_offset = 0.1;
  bool negative_axis_product = false;

  double rel_threshold = 0.1;
  double neighborhood = 0.5;
  std::size_t classify_window = 3;
  double blowup_factor = 10.0;

  double eps_floor = 1e-10;
  std::optional<double> eps_validation_tol;  // 1e-3 for oracle runs, 0.1 otherwise

  fs::path out_dir = "run";
};

/// Writes alpha.csv, eta.csv, epsilon.csv, diagnostics.json, cf_overlay.svg
/// and cf_{alpha,eta,epsilon}.svg into out_dir. Nothing is written when the
/// input cannot be read. A failing stage leaves only diagnostics.json, naming
/// the stage.
int cmd_identify(const IdentifyOptions& options, std::ostream& out, std::ostream& err);

struct DeconvolveOptions {
  fs::path curve;
  double cutoff = 6.0;
  std::string window = "cosine_taper";
  double x_half_width = 8.0;
  double x_spacing = 0.01;
  std::optional<fs::path> truth;
  std::string component;  // alpha, eta or eps; scored when truth is given
  ConfigOverrides overrides;
  fs::path out = "density.csv";
};

/// Writes the density CSV plus a .json sidecar and a .svg plot next to it.
int cmd_deconvolve(const DeconvolveOptions& options, std::ostream& out, std::ostream& err);

/// Writes run_dir/report.md from whatever artifacts are present.
int cmd_report(const fs::path& run_dir, std::ostream& out, std::ostream& err);

}  // namespace dyadic::cli
