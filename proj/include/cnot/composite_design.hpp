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

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnot/su2_pulse.hpp"

namespace cnot {

/// k-th area derivative of u11 at A = 2pi for an NB design condition.
/// `normalized` is |value| / (N/2)^k, the scale-free magnitude the solver
/// tolerance applies to.
struct ConditionResidual {
  int order = 0;
  Complex value;
  double normalized = 0.0;
};

enum class SequenceFamily { nb_standard, nb_optimized, broadband };

struct CatalogEntry {
  std::string name;
  /// (phi_2 ... phi_{m+1}) in units of pi, as tabulated.
  std::vector<double> half_phases_pi;
  SequenceFamily family;
};

/// Every built-in sequence, in table order.
const std::vector<CatalogEntry>& catalog_entries();

/// Expanded sequence 0, phi_2, ..., phi_{m+1}, ..., phi_2, 0 for a catalog
/// name (N5, N9, N13, N17, N21, N25, N5o, N9o, N13o, B3). Throws LookupError.
CompositeSequence catalog(std::string_view name);

/// d^k u11 / dA^k at `at_area`, from the exact trigonometric expansion.
Complex u11_area_derivative(const CompositeSequence& sequence, int order, double at_area);

/// Residuals of the even-order conditions k = 2, 4, ..., 2m at A = 2pi.
/// Throws ContractViolation for non-anagram or even-length sequences.
std::vector<ConditionResidual> nb_residuals(const CompositeSequence& sequence);

/// Euclidean norm of the normalized residuals.
double nb_residual_norm(const CompositeSequence& sequence);

struct NbSolverOptions {
  double tolerance = 1e-10;
  int max_iterations = 200;
};

struct NbSolution {
  CompositeSequence sequence;
  double residual_norm = 0.0;
  int iterations = 0;
};

/// Damped Newton refinement of the m half-phases (radians) so that all
/// NB conditions of the 2m+1 pulse anagram sequence vanish. Throws
/// SolverError on non-convergence, ContractViolation on bad arguments.
NbSolution solve_nb(int m, std::span<const double> seed, const NbSolverOptions& options = {});

/// solve_nb(...).sequence.
CompositeSequence solve_nb_phases(int m, std::span<const double> seed,
                                  const NbSolverOptions& options = {});

/// Full width of the maximal interval around A = 2pi on which
/// p(A) <= threshold. Zero if p(2pi) already exceeds the threshold.
double flat_bottom_width(const CompositeSequence& sequence, double threshold);

/// Full width of the maximal interval around A = pi on which
/// p(A) >= 1 - threshold. Zero if p(pi) is already below it.
double flat_top_width(const CompositeSequence& sequence, double threshold);

}  // namespace cnot
