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

// Text and CSV formats. Angles and areas are written in units of pi.

#include <iosfwd>
#include <string>

#include "cnot/gate_engine.hpp"
#include "cnot/ion_coupling.hpp"
#include "cnot/landscape.hpp"
#include "cnot/su2_pulse.hpp"

namespace cnot {

/// One phase per line, units of pi, 6 decimals.
void write_phase_list(std::ostream& os, const CompositeSequence& sequence);

/// Reads one phase per line in units of pi. Blank lines and lines starting
/// with '#' are skipped. Throws ConfigurationError on malformed input.
CompositeSequence read_phase_list(std::istream& is, std::string label = {});

/// Header `area,probability`, area in units of pi, 10 significant digits.
void write_profile_csv(std::ostream& os, const TransitionProfile& profile);

/// Header `eta,<label1>,...`, 10 significant digits, empty field where a
/// ratio is undefined.
void write_ratio_csv(std::ostream& os, const CouplingRatioCurve& curve);

/// Header `eta,area_scale,fidelity`, one row per cell, row-major over eta
/// then area_scale, 10 significant digits.
void write_scan_csv(std::ostream& os, const FidelityGrid& grid);

/// One matrix row per line as re,im pairs, 12 significant digits.
void write_gate_csv(std::ostream& os, const GateMatrix& matrix);

}  // namespace cnot
