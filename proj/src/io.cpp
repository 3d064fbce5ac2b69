#include "dyadic/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dyadic/error.hpp"

namespace dyadic::io {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

ComponentDist component_from_json(const json& j, const std::string& source,
                                  const std::string& key, const ComponentDist& fallback) {
  if (!j.is_object()) throw ParseError(source, 0, "'" + key + "' must be an object");
  DistKind kind = fallback.kind();
  double scale = fallback.scale();
  for (const auto& [name, value] : j.items()) {
    if (name == "kind") {
      if (!value.is_string()) throw ParseError(source, 0, key + ".kind must be a string");
      try {
        kind = parse_dist_kind(value.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(source, 0, key + ".kind: " + e.what());
      }
    } else if (name == "scale") {
      if (!value.is_number()) throw ParseError(source, 0, key + ".scale must be a number");
      scale = value.get<double>();
    } else if (name == "mean") {
      if (!value.is_number() || value.get<double>() != 0.0) {
        throw ParseError(source, 0, key + ".mean must be 0 (every component has mean zero)");
      }
    } else {
      throw ParseError(source, 0, "unknown key '" + key + "." + name + "'");
    }
  }
  try {
    return ComponentDist(kind, scale);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 0, key + ": " + e.what());
  }
}

json component_to_json(const ComponentDist& d) {
  return json{{"kind", std::string(to_string(d.kind()))}, {"scale", d.scale()}};
}

std::ifstream open_in(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
  return s.substr(start);
}

// Rows of a numeric CSV with the given header; blank lines are skipped.
std::vector<std::vector<double>> read_numeric_csv(const fs::path& path,
                                                  const std::vector<std::string>& header) {
  auto in = open_in(path);
  const std::string source = path.string();
  std::string line;
  std::size_t line_no = 0;
  std::string expected;
  for (std::size_t k = 0; k < header.size(); ++k) expected += (k ? "," : "") + header[k];
  if (!std::getline(in, line)) throw ParseError(source, 1, "empty file");
  ++line_no;
  if (trim(line) != expected) {
    throw ParseError(source, line_no, "expected header '" + expected + "', got '" + trim(line) + "'");
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      field = trim(field);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw ParseError(source, line_no, "not a number: '" + field + "'");
      }
      row.push_back(v);
    }
    if (line.back() == ',') throw ParseError(source, line_no, "empty trailing field");
    if (row.size() != header.size()) {
      throw ParseError(source, line_no,
                       "expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(row.size()));
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw ParseError(source, line_no, "non-finite value");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(source, line_no, "no data rows");
  return rows;
}

json cplx_pair(cplx v) { return json::array({v.real(), v.imag()}); }

}  // namespace

ModelConfig config_from_json(const json& j, const std::string& source) {
  if (!j.is_object()) throw ParseError(source, 0, "config must be a JSON object");
  ModelConfig config;
  for (const auto& [name, value] : j.items()) {
    if (name == "c") {
      if (!value.is_number()) throw ParseError(source, 0, "c must be a number");
      config.c = value.get<double>();
      if (!std::isfinite(config.c)) throw ParseError(source, 0, "c must be finite");
    } else if (name == "alpha") {
      config.alpha = component_from_json(value, source, name, config.alpha);
    } else if (name == "eta") {
      config.eta = component_from_json(value, source, name, config.eta);
    } else if (name == "eps") {
      config.eps = component_from_json(value, source, name, config.eps);
    } else {
      throw ParseError(source, 0, "unknown key '" + name + "'");
    }
  }
  return config;
}

json config_to_json(const ModelConfig& config) {
  return json{{"c", config.c},
              {"alpha", component_to_json(config.alpha)},
              {"eta", component_to_json(config.eta)},
              {"eps", component_to_json(config.eps)}};
}

ModelConfig load_config(const fs::path& path) {
  const auto j = read_json(path);
  // A samples sidecar carries its config under "config".
  if (j.is_object() && j.contains("config") && j.contains("seed")) {
    return config_from_json(j.at("config"), path.string());
  }
  return config_from_json(j, path.string());
}

json read_json(const fs::path& path) {
  auto in = open_in(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string(), 0, e.what());
  }
}

void write_json(const fs::path& path, const json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
  finish(out, path);
}

void write_text(const fs::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
  finish(out, path);
}

fs::path sidecar_path(const fs::path& path) {
  fs::path p = path;
  return p.replace_extension(".json");
}

void write_samples_csv(const fs::path& path, const SampleSet& samples) {
  auto out = open_out(path);
  out << "y_ij,y_kj,y_il\n";
  for (const auto& t : samples.triples()) {
    out << format_double(t.y_ij) << ',' << format_double(t.y_kj) << ',' << format_double(t.y_il)
        << '\n';
  }
  finish(out, path);
}

SampleSet read_samples_csv(const fs::path& path) {
  const auto rows = read_numeric_csv(path, {"y_ij", "y_kj", "y_il"});
  std::vector<TripleSample> triples;
  triples.reserve(rows.size());
  for (const auto& r : rows) triples.push_back({r[0], r[1], r[2]});

  std::uint64_t seed = 0;
  std::optional<ModelConfig> config;
  const auto side = sidecar_path(path);
  if (fs::exists(side)) {
    const json j = read_json(side);
    if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("config")) config = config_from_json(j.at("config"), side.string());
  }
  return SampleSet(std::move(triples), seed, config);
}

void write_curve_csv(const fs::path& path, const ComplexCurve& curve) {
  auto out = open_out(path);
  out << "s,re,im\n";
  const auto& grid = curve.grid();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out << format_double(grid.s(i)) << ',' << format_double(curve[i].real()) << ','
        << format_double(curve[i].imag()) << '\n';
  }
  finish(out, path);
}

ComplexCurve read_curve_csv(const fs::path& path) {
  const auto rows = read_numeric_csv(path, {"s", "re", "im"});
  const std::string source = path.string();
  if (rows.size() < 3 || rows.size() % 2 == 0) {
    throw ParseError(source, 0, "a curve needs an odd number (>= 3) of rows, got " +
                                    std::to_string(rows.size()));
  }
  const double s_max = rows.back()[0];
  if (!(s_max > 0.0)) throw ParseError(source, rows.size() + 1, "last s must be positive");
  const FreqGrid grid(s_max, rows.size());
  std::vector<cplx> values;
  values.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::abs(rows[i][0] - grid.s(i)) > 1e-9 * grid.spacing() + 1e-12 * s_max) {
      throw ParseError(source, i + 2,
                       "s = " + format_double(rows[i][0]) +
                           " is off the symmetric uniform grid (expected " +
                           format_double(grid.s(i)) + ")");
    }
    values.emplace_back(rows[i][1], rows[i][2]);
  }
  return ComplexCurve(grid, std::move(values));
}

void write_density_csv(const fs::path& path, const DensityEstimate& est) {
  auto out = open_out(path);
  out << "x,f\n";
  for (std::size_t j = 0; j < est.x.size(); ++j) {
    out << format_double(est.x[j]) << ',' << format_double(est.values[j]) << '\n';
  }
  finish(out, path);
}

json zero_entries(const StageResult& stage) {
  json out = json::array();
  for (const auto& z : stage.zeros.points) {
    out.push_back({{"stage", stage.name},
                   {"location", z.location},
                   {"modulus", z.modulus},
                   {"trusted", z.trusted},
                   {"mask_radius", z.radius}});
  }
  return out;
}

json singular_entries(const StageResult& stage) {
  json out = json::array();
  for (const auto& v : stage.verdicts) {
    out.push_back({{"stage", stage.name},
                   {"location", v.location},
                   {"peak", v.peak},
                   {"baseline", v.baseline},
                   {"trusted", v.trusted},
                   {"classification", v.singular ? "singular" : "removable"}});
  }
  return out;
}

json trace_entries(const StageResult& stage) {
  json out = json::array();
  for (const auto& t : stage.reconstruction.probes) {
    json values = json::array();
    json extrapolated = json::array();
    for (const auto& v : t.values) values.push_back(cplx_pair(v));
    for (const auto& v : t.extrapolated) extrapolated.push_back(cplx_pair(v));
    out.push_back({{"stage", stage.name},
                   {"s", t.s},
                   {"deltas", t.deltas},
                   {"values", values},
                   {"extrapolated", extrapolated},
                   {"last_change", t.last_change},
                   {"converged", t.converged}});
  }
  return out;
}

json convergence_entry(const StageResult& stage) {
  const auto& r = stage.reconstruction;
  bool probes_ok = true;
  for (const auto& t : r.probes) probes_ok = probes_ok && t.converged;
  return {{"stage", stage.name},
          {"converged", r.converged() && probes_ok},
          {"bridged_points", r.bridged_points},
          {"nonconverged_points", r.nonconverged_points},
          {"worst_change", r.worst_change},
          {"deltas", r.deltas},
          {"continuity_window", r.window}};
}

json validation_to_json(const CfValidation& v) {
  return {{"origin_violation", v.origin_violation},
          {"modulus_violation", v.modulus_violation},
          {"hermitian_violation", v.hermitian_violation},
          {"tolerance", v.tolerance},
          {"passed", v.passed}};
}

}  // namespace dyadic::io
