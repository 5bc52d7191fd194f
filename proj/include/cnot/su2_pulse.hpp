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
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace cnot {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2pi).
double reduce_angle(double angle);

/// Complex 2x2 propagator of a two-level system, rows/columns ordered
/// (|0>, |1>).
struct SU2Matrix {
  Complex u11{1.0};
  Complex u12{0.0};
  Complex u21{0.0};
  Complex u22{1.0};

  static SU2Matrix identity() { return {}; }

  SU2Matrix operator*(const SU2Matrix& rhs) const;
  SU2Matrix adjoint() const;
  /// Largest entrywise deviation of U^dagger U from the identity.
  double unitarity_error() const;
};

/// Ordered list of pulse phases (radians), all pulses sharing one area.
class CompositeSequence {
 public:
  explicit CompositeSequence(std::vector<double> phases, std::string label = {});

  /// Builds the anagram sequence 0, h_1, ..., h_m, ..., h_1, 0 of 2m+1
  /// pulses from the half list (h_1 ... h_m) = (phi_2 ... phi_{m+1}).
  static CompositeSequence from_half_phases(std::span<const double> half_phases,
                                            std::string label = {});

  const std::vector<double>& phases() const noexcept { return phases_; }
  std::size_t size() const noexcept { return phases_.size(); }
  const std::string& label() const noexcept { return label_; }

  /// phi_k == phi_{N+1-k} for every k, to within `tolerance`.
  bool is_anagram(double tolerance = 1e-12) const;

  /// (phi_2 ... phi_{m+1}) of an odd-length anagram sequence.
  /// Throws ContractViolation otherwise.
  std::vector<double> half_phases() const;

  /// Every phase shifted by `delta`.
  CompositeSequence shifted(double delta) const;

 private:
  std::vector<double> phases_;
  std::string label_;
};

/// Resonant pulse of the given area and phase:
/// [[cos(A/2), i e^{-i phi} sin(A/2)], [i e^{i phi} sin(A/2), cos(A/2)]].
SU2Matrix pulse_propagator(double area, double phase);

/// Product U_{phi_1} U_{phi_2} ... U_{phi_N}, every pulse at `area`.
SU2Matrix sequence_propagator(const CompositeSequence& sequence, double area);

/// |u21|^2.
double transition_probability(const SU2Matrix& propagator);

struct TransitionProfile {
  std::vector<double> areas;
  std::vector<double> probabilities;
};

/// Transition probability on `points` uniformly spaced per-pulse areas
/// spanning [area_min, area_max].
TransitionProfile excitation_profile(const CompositeSequence& sequence,
                                     double area_min, double area_max,
                                     std::size_t points);

/// Phase picked up by the target qubit when the anagram sequence acts as a
/// pi pulse: |0> -> e^{i phase} |1>, i.e. phase = arg u21 at A = pi.
/// Result reduced to [0, 2pi). Throws ContractViolation for non-anagram or
/// even-length input.
double target_phase(const CompositeSequence& sequence);

}  // namespace cnot
