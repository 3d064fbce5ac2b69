#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace dyadic::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  int width = 720;
  int height = 420;
};

/// Axes with ticks, one polyline per series and a legend. Non-finite points
/// break the polyline. Output depends only on the input.
std::string render(const Plot& plot);
void write(const std::filesystem::path& path, const Plot& plot);

}  // namespace dyadic::svg
