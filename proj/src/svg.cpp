// Copyright 2026 The cnot-composite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cnot/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace cnot {

namespace {

constexpr double kMaxNines = 5.0;

std::string fmt(double v, const char* spec = "%.4g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Dark blue -> teal -> yellow, linear in t in [0, 1].
std::string ramp(double t) {
  t = std::clamp(t, 0.0, 1.0);
  constexpr std::array<std::array<double, 3>, 3> stops{{{20, 24, 82}, {32, 144, 140}, {253, 231, 37}}};
  const double x = t * 2.0;
  const auto k = static_cast<std::size_t>(std::min(1.0, std::floor(x)));
  const double f = x - static_cast<double>(k);
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(stops[k][0] + f * (stops[k + 1][0] - stops[k][0])),
                static_cast<int>(stops[k][1] + f * (stops[k + 1][1] - stops[k][1])),
                static_cast<int>(stops[k][2] + f * (stops[k + 1][2] - stops[k][2])));
  return buf;
}

double nines(double f) {
  const double infidelity = 1.0 - f;
  if (infidelity <= std::pow(10.0, -kMaxNines)) return kMaxNines;
  return std::clamp(-std::log10(infidelity), 0.0, kMaxNines);
}

}  // namespace

void write_heatmap_svg(std::ostream& os, const FidelityGrid& grid, const std::string& title) {
  const double left = 70, top = 40, width = 480, height = 360, legend_x = left + width + 30;
  const double total_w = legend_x + 90, total_h = top + height + 60;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w << "\" height=\""
     << total_h << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << left << "\" y=\"24\" font-size=\"14\">" << escape(title) << "</text>\n";
  const double cw = width / static_cast<double>(grid.rows());
  const double ch = height / static_cast<double>(grid.cols());
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    for (std::size_t j = 0; j < grid.cols(); ++j) {
      const double x = left + cw * static_cast<double>(i);
      const double y = top + height - ch * static_cast<double>(j + 1);
      os << "<rect x=\"" << fmt(x, "%.3f") << "\" y=\"" << fmt(y, "%.3f") << "\" width=\""
         << fmt(cw + 0.05, "%.3f") << "\" height=\"" << fmt(ch + 0.05, "%.3f") << "\" fill=\""
         << ramp(nines(grid.at(i, j)) / kMaxNines) << "\"/>\n";
    }
  }
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width << "\" height=\""
     << height << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = t / 4.0;
    const double eta = grid.etas.front() + fx * (grid.etas.back() - grid.etas.front());
    const double area =
        grid.area_scales.front() + fx * (grid.area_scales.back() - grid.area_scales.front());
    os << "<text x=\"" << left + fx * width << "\" y=\"" << top + height + 18
       << "\" text-anchor=\"middle\">" << fmt(eta) << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << top + height - fx * height + 4
       << "\" text-anchor=\"end\">" << fmt(area) << "</text>\n";
  }
  os << "<text x=\"" << left + width / 2 << "\" y=\"" << top + height + 40
     << "\" text-anchor=\"middle\">eta</text>\n";
  os << "<text transform=\"translate(" << left - 48 << ' ' << top + height / 2
     << ") rotate(-90)\" text-anchor=\"middle\">A / A_min</text>\n";
  // Legend: color bar labelled by fidelity.
  constexpr int kSteps = 50;
  for (int k = 0; k < kSteps; ++k) {
    const double t = (k + 0.5) / kSteps;
    os << "<rect x=\"" << legend_x << "\" y=\"" << fmt(top + height * (1.0 - (k + 1.0) / kSteps), "%.3f")
       << "\" width=\"16\" height=\"" << fmt(height / kSteps + 0.05, "%.3f") << "\" fill=\""
       << ramp(t) << "\"/>\n";
  }
  for (int k = 0; k <= static_cast<int>(kMaxNines); ++k) {
    const double y = top + height * (1.0 - k / kMaxNines);
    const std::string label = k == 0 ? "0" : "1-1e-" + std::to_string(k);
    os << "<text x=\"" << legend_x + 22 << "\" y=\"" << y + 4 << "\">" << label << "</text>\n";
  }
  os << "<text x=\"" << legend_x << "\" y=\"" << top - 8 << "\">F*</text>\n";
  os << "</svg>\n";
}

void write_line_chart_svg(std::ostream& os, const std::vector<double>& x,
                          const std::vector<LineSeries>& series, const std::string& title,
                          const std::string& x_label, const std::string& y_label) {
  const double left = 70, top = 40, width = 520, height = 340;
  double y_min = 0.0, y_max = 0.0;
  bool seeded = false;
  for (const LineSeries& s : series) {
    for (const auto& v : s.values) {
      if (!v || !std::isfinite(*v)) continue;
      if (!seeded) {
        y_min = y_max = *v;
        seeded = true;
      }
      y_min = std::min(y_min, *v);
      y_max = std::max(y_max, *v);
    }
  }
  if (!seeded || y_max == y_min) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  const double x_min = x.empty() ? 0.0 : x.front();
  const double x_max = x.empty() || x.back() == x_min ? x_min + 1.0 : x.back();
  auto px = [&](double v) { return left + (v - x_min) / (x_max - x_min) * width; };
  auto py = [&](double v) { return top + height - (v - y_min) / (y_max - y_min) * height; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << left + width + 160
     << "\" height=\"" << top + height + 60 << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << left << "\" y=\"24\" font-size=\"14\">" << escape(title) << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width << "\" height=\""
     << height << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double f = t / 4.0;
    os << "<text x=\"" << left + f * width << "\" y=\"" << top + height + 18
       << "\" text-anchor=\"middle\">" << fmt(x_min + f * (x_max - x_min)) << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << top + height - f * height + 4
       << "\" text-anchor=\"end\">" << fmt(y_min + f * (y_max - y_min)) << "</text>\n";
  }
  os << "<text x=\"" << left + width / 2 << "\" y=\"" << top + height + 40
     << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
  os << "<text transform=\"translate(" << left - 50 << ' ' << top + height / 2
     << ") rotate(-90)\" text-anchor=\"middle\">" << escape(y_label) << "</text>\n";
  static constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c",
                                                      "#9467bd", "#ff7f0e", "#17becf"};
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % kColors.size()];
    std::string path;
    bool pen_down = false;
    for (std::size_t i = 0; i < x.size() && i < series[s].values.size(); ++i) {
      const auto& v = series[s].values[i];
      if (!v || !std::isfinite(*v)) {
        pen_down = false;
        continue;
      }
      path += (pen_down ? " L" : " M") + fmt(px(x[i]), "%.2f") + ' ' + fmt(py(*v), "%.2f");
      pen_down = true;
    }
    os << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\"/>\n";
    os << "<text x=\"" << left + width + 10 << "\" y=\"" << top + 14 + 16 * static_cast<double>(s)
       << "\" fill=\"" << color << "\">" << escape(series[s].label) << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace cnot
