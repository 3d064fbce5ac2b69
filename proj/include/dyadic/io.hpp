#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "dyadic/deconvolution.hpp"
#include "dyadic/identification.hpp"
#include "dyadic/model.hpp"

namespace dyadic::io {

using json = nlohmann::json;
namespace fs = std::filesystem;

/// Round-trip formatting used in every CSV.
std::string format_double(double v);

/// Config schema:
///   { "c": 0.0,
///     "alpha": {"kind": "normal", "scale": 1.0},
///     "eta":   {"kind": "two_point_symmetric", "scale": 1.0},
///     "eps":   {"kind": "normal", "scale": 0.5} }
/// Missing keys keep their defaults (c = 0, normal(1)). A component may carry
/// "mean", which must be 0. Unknown keys are rejected.
ModelConfig config_from_json(const json& j, const std::string& source = "config");
json config_to_json(const ModelConfig& config);
/// Reads a config file or the sidecar written next to a samples CSV.
ModelConfig load_config(const fs::path& path);

json read_json(const fs::path& path);
/// Pretty-printed with a trailing newline; keys sorted.
void write_json(const fs::path& path, const json& j);
void write_text(const fs::path& path, const std::string& text);

/// Samples CSV: header y_ij,y_kj,y_il.
void write_samples_csv(const fs::path& path, const SampleSet& samples);
/// Reads the CSV and, when present, the sidecar next to it for seed and config.
SampleSet read_samples_csv(const fs::path& path);
fs::path sidecar_path(const fs::path& path);

/// Curve CSV: header s,re,im on a symmetric uniform grid with an odd row count.
void write_curve_csv(const fs::path& path, const ComplexCurve& curve);
ComplexCurve read_curve_csv(const fs::path& path);

/// Density CSV: header x,f.
void write_density_csv(const fs::path& path, const DensityEstimate& est);

json zero_entries(const StageResult& stage);
json singular_entries(const StageResult& stage);
json trace_entries(const StageResult& stage);
json convergence_entry(const StageResult& stage);
json validation_to_json(const CfValidation& v);

}  // namespace dyadic::io
