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

#include "cnot/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cnot/error.hpp"

namespace cnot {

namespace {

std::string sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

void write_phase_list(std::ostream& os, const CompositeSequence& sequence) {
  char buf[64];
  for (double p : sequence.phases()) {
    std::snprintf(buf, sizeof buf, "%.6f", p / kPi);
    os << buf << '\n';
  }
}

CompositeSequence read_phase_list(std::istream& is, std::string label) {
  std::vector<double> phases;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    double v = 0.0;
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) {
      throw ConfigurationError("phase list line " + std::to_string(line_no) +
                               ": expected a single number in units of pi");
    }
    phases.push_back(v * kPi);
  }
  if (phases.empty()) throw ConfigurationError("phase list is empty");
  return CompositeSequence(std::move(phases), std::move(label));
}

void write_profile_csv(std::ostream& os, const TransitionProfile& profile) {
  os << "area,probability\n";
  for (std::size_t i = 0; i < profile.areas.size(); ++i) {
    os << sig(profile.areas[i] / kPi, 10) << ',' << sig(profile.probabilities[i], 10) << '\n';
  }
}

void write_ratio_csv(std::ostream& os, const CouplingRatioCurve& curve) {
  os << "eta";
  for (const std::string& l : curve.labels()) os << ',' << l;
  os << '\n';
  for (std::size_t i = 0; i < curve.etas.size(); ++i) {
    os << sig(curve.etas[i], 10);
    for (const auto& series : curve.ratios) {
      os << ',';
      if (series[i]) os << sig(*series[i], 10);
    }
    os << '\n';
  }
}

void write_scan_csv(std::ostream& os, const FidelityGrid& grid) {
  os << "eta,area_scale,fidelity\n";
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    for (std::size_t j = 0; j < grid.cols(); ++j) {
      os << sig(grid.etas[i], 10) << ',' << sig(grid.area_scales[j], 10) << ','
         << sig(grid.at(i, j), 10) << '\n';
    }
  }
}

void write_gate_csv(std::ostream& os, const GateMatrix& matrix) {
  for (std::size_t r = 0; r < matrix.dim(); ++r) {
    for (std::size_t c = 0; c < matrix.dim(); ++c) {
      if (c > 0) os << ',';
      os << sig(matrix(r, c).real(), 12) << ',' << sig(matrix(r, c).imag(), 12);
    }
    os << '\n';
  }
}

}  // namespace cnot
