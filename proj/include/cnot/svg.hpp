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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cnot/landscape.hpp"

namespace cnot {

/// Heatmap of -log10(1 - F*) with a linear color ramp over [0, 5] nines and
/// a legend; eta on the horizontal axis, area scale on the vertical axis.
void write_heatmap_svg(std::ostream& os, const FidelityGrid& grid, const std::string& title);

struct LineSeries {
  std::string label;
  std::vector<std::optional<double>> values;
};

/// Simple multi-series line chart; undefined samples break the line.
void write_line_chart_svg(std::ostream& os, const std::vector<double>& x,
                          const std::vector<LineSeries>& series, const std::string& title,
                          const std::string& x_label, const std::string& y_label);

}  // namespace cnot
