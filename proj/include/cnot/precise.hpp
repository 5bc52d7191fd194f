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

// Extended-precision entry points for NB sequences. Flat bottoms of order
// 2m+2 push p below 1e-30 close to 2pi, far under double rounding, so
// slope measurements there need both phases and propagators in 50 digits.

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cnot {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

struct PreciseNbSolution {
  std::vector<HighPrecision> half_phases;
  HighPrecision residual_norm;
  int iterations = 0;
};

/// Newton refinement of NB half-phases (radians) in 50-digit arithmetic.
PreciseNbSolution solve_nb_half_phases_precise(std::span<const double> seed,
                                               const HighPrecision& tolerance = HighPrecision("1e-40"),
                                               int max_iterations = 200);

/// p(A) = |u21|^2 of the anagram sequence built from `half_phases`.
HighPrecision precise_transition_probability(std::span<const HighPrecision> half_phases,
                                             const HighPrecision& area);

}  // namespace cnot
