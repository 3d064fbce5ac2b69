#include "dyadic/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "dyadic/io.hpp"

namespace dyadic::svg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Ticks at 1, 2 or 5 times a power of ten, about five per axis.
std::vector<double> ticks(double lo, double hi) {
  const double raw = (hi - lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> out;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) out.push_back(t);
  return out;
}

}  // namespace

std::string render(const Plot& plot) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double x_lo = inf, x_hi = -inf, y_lo = inf, y_hi = -inf;
  for (const auto& s : plot.series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x_lo = std::min(x_lo, s.x[i]);
      x_hi = std::max(x_hi, s.x[i]);
      y_lo = std::min(y_lo, s.y[i]);
      y_hi = std::max(y_hi, s.y[i]);
    }
  }
  if (!(x_lo < x_hi)) { x_lo = std::isfinite(x_lo) ? x_lo - 1.0 : 0.0; x_hi = x_lo + 2.0; }
  if (!(y_lo < y_hi)) { y_lo = std::isfinite(y_lo) ? y_lo - 1.0 : 0.0; y_hi = y_lo + 2.0; }
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const double left = 64, right = 16, top = 36, bottom = 48;
  const double pw = plot.width - left - right;
  const double ph = plot.height - top - bottom;
  auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width << "\" height=\""
    << plot.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num(plot.width / 2.0) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
    << escape(plot.title) << "</text>\n";
  o << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw)
    << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double t : ticks(x_lo, x_hi)) {
    o << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(px(t))
      << "\" y2=\"" << num(top + ph + 5) << "\" stroke=\"black\"/>"
      << "<text x=\"" << num(px(t)) << "\" y=\"" << num(top + ph + 18)
      << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  for (double t : ticks(y_lo, y_hi)) {
    o << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(py(t)) << "\" x2=\"" << num(left)
      << "\" y2=\"" << num(py(t)) << "\" stroke=\"black\"/>"
      << "<text x=\"" << num(left - 8) << "\" y=\"" << num(py(t) + 4)
      << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
  }
  if (y_lo < 0.0 && y_hi > 0.0) {
    o << "<line x1=\"" << num(left) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(left + pw)
      << "\" y2=\"" << num(py(0)) << "\" stroke=\"#bbbbbb\"/>\n";
  }
  o << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(plot.height - 10.0)
    << "\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n";
  o << "<text transform=\"translate(16," << num(top + ph / 2) << ") rotate(-90)\" "
    << "text-anchor=\"middle\">" << escape(plot.y_label) << "</text>\n";

  for (const auto& s : plot.series) {
    const std::string style = "fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"" +
                              (s.dashed ? " stroke-dasharray=\"6,4\"" : "");
    std::string points;
    auto flush = [&] {
      if (!points.empty()) o << "<polyline " << style << " points=\"" << points << "\"/>\n";
      points.clear();
    };
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += num(px(s.x[i])) + ',' + num(py(s.y[i]));
    }
    flush();
  }

  double ly = top + 14;
  for (const auto& s : plot.series) {
    o << "<line x1=\"" << num(left + pw - 150) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
      << num(left + pw - 126) << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << s.color
      << "\" stroke-width=\"2\"" << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>"
      << "<text x=\"" << num(left + pw - 120) << "\" y=\"" << num(ly) << "\">" << escape(s.label)
      << "</text>\n";
    ly += 16;
  }
  o << "</svg>\n";
  return o.str();
}

void write(const std::filesystem::path& path, const Plot& plot) { io::write_text(path, render(plot)); }

}  // namespace dyadic::svg
