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

#include "cnot/su2_pulse.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cnot/error.hpp"

namespace cnot {

double reduce_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a value just below a multiple of 2pi can round up to 2pi itself.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

SU2Matrix SU2Matrix::operator*(const SU2Matrix& rhs) const {
  return {u11 * rhs.u11 + u12 * rhs.u21, u11 * rhs.u12 + u12 * rhs.u22,
          u21 * rhs.u11 + u22 * rhs.u21, u21 * rhs.u12 + u22 * rhs.u22};
}

SU2Matrix SU2Matrix::adjoint() const {
  return {std::conj(u11), std::conj(u21), std::conj(u12), std::conj(u22)};
}

double SU2Matrix::unitarity_error() const {
  const SU2Matrix p = adjoint() * *this;
  return std::max({std::abs(p.u11 - 1.0), std::abs(p.u12), std::abs(p.u21),
                   std::abs(p.u22 - 1.0)});
}

CompositeSequence::CompositeSequence(std::vector<double> phases, std::string label)
    : phases_(std::move(phases)), label_(std::move(label)) {
  if (phases_.empty()) {
    throw ConfigurationError("composite sequence needs at least one pulse");
  }
}

CompositeSequence CompositeSequence::from_half_phases(std::span<const double> half_phases,
                                                      std::string label) {
  std::vector<double> phases;
  phases.reserve(2 * half_phases.size() + 1);
  phases.push_back(0.0);
  phases.insert(phases.end(), half_phases.begin(), half_phases.end());
  if (!half_phases.empty()) {
    // Mirror everything except the middle element, then close with phi_N = 0.
    phases.insert(phases.end(), half_phases.rbegin() + 1, half_phases.rend());
    phases.push_back(0.0);
  }
  return CompositeSequence(std::move(phases), std::move(label));
}

bool CompositeSequence::is_anagram(double tolerance) const {
  const std::size_t n = phases_.size();
  for (std::size_t k = 0; k < n / 2; ++k) {
    if (std::abs(phases_[k] - phases_[n - 1 - k]) > tolerance) return false;
  }
  return true;
}

std::vector<double> CompositeSequence::half_phases() const {
  if (phases_.size() % 2 == 0 || !is_anagram()) {
    throw ContractViolation("sequence '" + label_ +
                            "' is not an odd-length anagram sequence");
  }
  const std::size_t m = phases_.size() / 2;
  return {phases_.begin() + 1, phases_.begin() + 1 + static_cast<std::ptrdiff_t>(m)};
}

CompositeSequence CompositeSequence::shifted(double delta) const {
  std::vector<double> phases = phases_;
  for (double& p : phases) p += delta;
  return CompositeSequence(std::move(phases), label_);
}

SU2Matrix pulse_propagator(double area, double phase) {
  const double c = std::cos(0.5 * area);
  const double s = std::sin(0.5 * area);
  const Complex i{0.0, 1.0};
  return {Complex{c}, i * std::polar(s, -phase), i * std::polar(s, phase), Complex{c}};
}

SU2Matrix sequence_propagator(const CompositeSequence& sequence, double area) {
  SU2Matrix u = SU2Matrix::identity();
  for (double phase : sequence.phases()) u = u * pulse_propagator(area, phase);
  return u;
}

double transition_probability(const SU2Matrix& propagator) {
  return std::norm(propagator.u21);
}

TransitionProfile excitation_profile(const CompositeSequence& sequence, double area_min,
                                     double area_max, std::size_t points) {
  if (points < 2 || !(area_min < area_max)) {
    throw ConfigurationError("excitation profile needs area_min < area_max and >= 2 points");
  }
  TransitionProfile profile;
  profile.areas.resize(points);
  profile.probabilities.resize(points);
  const double step = (area_max - area_min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double area = i + 1 == points ? area_max : area_min + step * static_cast<double>(i);
    profile.areas[i] = area;
    profile.probabilities[i] =
        std::clamp(transition_probability(sequence_propagator(sequence, area)), 0.0, 1.0);
  }
  return profile;
}

double target_phase(const CompositeSequence& sequence) {
  if (sequence.size() % 2 == 0 || !sequence.is_anagram()) {
    throw ContractViolation("target phase requires an odd-length anagram sequence");
  }
  // The closed form is written for phi_1 = 0; a common offset phi_1 rotates
  // u21 by e^{i phi_1}.
  const auto& phases = sequence.phases();
  const double offset = phases.front();
  const int m = static_cast<int>(sequence.size() / 2);
  auto phi = [&](int k) { return phases[static_cast<std::size_t>(k - 1)] - offset; };
  const double sign_m = m % 2 == 0 ? 1.0 : -1.0;
  double sum = 0.0;
  for (int k = 2; k <= m; ++k) sum += (k % 2 == 0 ? 1.0 : -1.0) * phi(k);
  return reduce_angle(sign_m * (0.5 * kPi + phi(m + 1)) - 2.0 * sum + offset);
}

}  // namespace cnot
