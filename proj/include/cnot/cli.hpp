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
#include <string>
#include <vector>

#include "cnot/landscape.hpp"

namespace cnot::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

/// Parses a scalar that may carry a `pi` suffix: "0.5", "4pi", "pi", "-0.25pi".
double parse_scaled(const std::string& text);

/// Parses `min:max:count`, min and max accepting a `pi` suffix. Angle
/// ranges read bare numbers in units of pi, so "0:4:9" and "0:4pi:9" both
/// span [0, 4 pi] radians.
Axis parse_range(const std::string& text, bool angle = false);

/// Runs the command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace cnot::cli
