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

#include "cnot/precise.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include "cnot/trig_polynomial.hpp"

namespace cnot::detail {
template <>
struct ComplexOf<HighPrecision> {
  using type = boost::multiprecision::cpp_complex_50;
};
}  // namespace cnot::detail

#include "cnot/detail/nb_solver.hpp"

namespace cnot {

PreciseNbSolution solve_nb_half_phases_precise(std::span<const double> seed,
                                               const HighPrecision& tolerance,
                                               int max_iterations) {
  std::vector<HighPrecision> half(seed.begin(), seed.end());
  auto outcome = detail::newton_nb<HighPrecision>(std::move(half), tolerance, max_iterations);
  return {std::move(outcome.half), outcome.residual_norm, outcome.iterations};
}

HighPrecision precise_transition_probability(std::span<const HighPrecision> half_phases,
                                             const HighPrecision& area) {
  using C = detail::ComplexT<HighPrecision>;
  const std::vector<HighPrecision> phases = detail::expand_half_phases(half_phases);
  const HighPrecision c = cos(area / 2);
  const HighPrecision s = sin(area / 2);
  const C i(HighPrecision(0), HighPrecision(1));
  C u11(1), u12(0), u21(0), u22(1);
  for (const HighPrecision& phase : phases) {
    const C p11(c), p22(c);
    const C p12 = i * detail::unit_phasor(HighPrecision(-phase)) * s;
    const C p21 = i * detail::unit_phasor(phase) * s;
    const C n11 = u11 * p11 + u12 * p21;
    const C n12 = u11 * p12 + u12 * p22;
    const C n21 = u21 * p11 + u22 * p21;
    const C n22 = u21 * p12 + u22 * p22;
    u11 = n11;
    u12 = n12;
    u21 = n21;
    u22 = n22;
  }
  return u21.real() * u21.real() + u21.imag() * u21.imag();
}

}  // namespace cnot
