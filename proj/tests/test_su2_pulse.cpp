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

#include <doctest.h>

#include <array>
#include <cmath>

#include "cnot/composite_design.hpp"
#include "cnot/error.hpp"
#include "cnot/su2_pulse.hpp"

using namespace cnot;

namespace {

using Mat = std::array<std::array<Complex, 2>, 2>;

// Plain 2x2 arithmetic kept apart from SU2Matrix so it can serve as an oracle.
Mat oracle_pulse(double area, double phase) {
  const Complex i{0.0, 1.0};
  return {{{std::cos(area / 2), i * std::exp(-i * phase) * std::sin(area / 2)},
           {i * std::exp(i * phase) * std::sin(area / 2), std::cos(area / 2)}}};
}

Mat oracle_mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 2; ++k)
      for (int q = 0; q < 2; ++q) c[r][q] += a[r][k] * b[k][q];
  return c;
}

bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("pulse propagator special areas") {
  const Complex i{0.0, 1.0};
  const SU2Matrix pi = pulse_propagator(kPi, 0.0);
  CHECK(close(pi.u11, 0.0));
  CHECK(close(pi.u12, i));
  CHECK(close(pi.u21, i));
  CHECK(close(pi.u22, 0.0));
  for (double phase : {0.0, 0.3, 2.1, -4.0}) {
    const SU2Matrix zero = pulse_propagator(0.0, phase);
    CHECK(close(zero.u11, 1.0));
    CHECK(close(zero.u12, 0.0));
    const SU2Matrix full = pulse_propagator(kTwoPi, phase);
    CHECK(close(full.u11, -1.0));
    CHECK(close(full.u22, -1.0));
    CHECK(std::abs(full.u21) <= 1e-12);
  }
}

TEST_CASE("transition probability of single pulses") {
  CHECK(transition_probability(pulse_propagator(kPi, 0.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(transition_probability(pulse_propagator(kTwoPi, 0.0)) <= 1e-30);
  CHECK(transition_probability(pulse_propagator(kPi / 2, 0.0)) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("pulse propagator matches the explicit matrix and stays unitary") {
  for (double area : {0.1, 1.0, 2.5, 5.0, 11.0}) {
    for (double phase : {0.0, 0.7, 3.9}) {
      const SU2Matrix u = pulse_propagator(area, phase);
      const Mat o = oracle_pulse(area, phase);
      CHECK(close(u.u11, o[0][0]));
      CHECK(close(u.u12, o[0][1]));
      CHECK(close(u.u21, o[1][0]));
      CHECK(close(u.u22, o[1][1]));
      CHECK(u.unitarity_error() <= 1e-12);
      CHECK(std::norm(u.u11) + std::norm(u.u21) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("sequence propagator order and composition") {
  const CompositeSequence one({0.4});
  const SU2Matrix a = sequence_propagator(one, 1.3);
  const SU2Matrix b = pulse_propagator(1.3, 0.4);
  CHECK(close(a.u11, b.u11));
  CHECK(close(a.u12, b.u12));
  CHECK(close(a.u21, b.u21));

  const CompositeSequence zeros({0.0, 0.0, 0.0, 0.0, 0.0});
  const SU2Matrix z = sequence_propagator(zeros, 0.37);
  const SU2Matrix ref = pulse_propagator(5 * 0.37, 0.0);
  CHECK(close(z.u11, ref.u11));
  CHECK(close(z.u21, ref.u21));

  // A non-palindromic list pins the left-to-right convention.
  const CompositeSequence mixed({0.0, 1.1, 2.9});
  Mat o = oracle_mul(oracle_mul(oracle_pulse(0.8, 0.0), oracle_pulse(0.8, 1.1)), oracle_pulse(0.8, 2.9));
  const SU2Matrix m = sequence_propagator(mixed, 0.8);
  CHECK(close(m.u11, o[0][0]));
  CHECK(close(m.u12, o[0][1]));
  CHECK(close(m.u21, o[1][0]));
  CHECK(close(m.u22, o[1][1]));
}

TEST_CASE("odd sequences at pi transfer fully") {
  for (const char* name : {"N5", "N9", "N13", "N25", "N9o", "B3"}) {
    CHECK(transition_probability(sequence_propagator(catalog(name), kPi)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("B3 at pi against direct multiplication") {
  const double phi = 0.65 * kPi;
  const Mat o = oracle_mul(oracle_mul(oracle_pulse(kPi, 0.0), oracle_pulse(kPi, phi)),
                           oracle_pulse(kPi, 0.0));
  const SU2Matrix u = sequence_propagator(catalog("B3"), kPi);
  const Complex i{0.0, 1.0};
  CHECK(close(u.u12, o[0][1]));
  CHECK(close(u.u21, o[1][0]));
  CHECK(close(u.u12, -i * std::exp(i * phi)));
  CHECK(close(u.u21, -i * std::exp(-i * phi)));
  CHECK(std::abs(u.u11) <= 1e-12);
}

TEST_CASE("excitation profile of a single pulse") {
  const TransitionProfile p = excitation_profile(CompositeSequence({0.0}), 0.0, kTwoPi, 101);
  REQUIRE(p.areas.size() == 101);
  REQUIRE(p.probabilities.size() == 101);
  for (std::size_t k = 0; k < p.areas.size(); ++k) {
    CHECK(p.probabilities[k] == doctest::Approx(std::pow(std::sin(p.areas[k] / 2), 2)).epsilon(1e-12));
  }
  CHECK(p.areas.front() == 0.0);
  CHECK(p.areas.back() == doctest::Approx(kTwoPi));
}

TEST_CASE("excitation profile validates its grid") {
  const CompositeSequence s({0.0});
  CHECK_THROWS_AS(excitation_profile(s, 0.0, 1.0, 1), ConfigurationError);
  CHECK_THROWS_AS(excitation_profile(s, 1.0, 1.0, 10), ConfigurationError);
  CHECK_THROWS_AS(excitation_profile(s, 2.0, 1.0, 10), ConfigurationError);
}

TEST_CASE("anagram profiles are symmetric about pi") {
  for (const char* name : {"N5", "N13", "N25", "N9o", "B3"}) {
    const CompositeSequence seq = catalog(name);
    for (int k = 0; k <= 200; ++k) {
      const double a = kTwoPi * k / 200.0;
      const double p1 = transition_probability(sequence_propagator(seq, a));
      const double p2 = transition_probability(sequence_propagator(seq, kTwoPi - a));
      CHECK(std::abs(p1 - p2) <= 1e-10);
    }
  }
}

TEST_CASE("global phase shift leaves the profile unchanged") {
  const CompositeSequence seq = catalog("N13o");
  for (double delta : {0.3, -1.7, 4.0}) {
    const CompositeSequence shifted = seq.shifted(delta);
    for (double a : {0.2, 1.0, 2.9, 5.5}) {
      CHECK(std::abs(transition_probability(sequence_propagator(seq, a)) -
                     transition_probability(sequence_propagator(shifted, a))) <= 1e-12);
    }
  }
}

TEST_CASE("composite propagators stay unitary") {
  for (const CatalogEntry& e : catalog_entries()) {
    const CompositeSequence seq = catalog(e.name);
    for (double a : {0.3, kPi, 4.4, kTwoPi}) {
      CHECK(sequence_propagator(seq, a).unitarity_error() <= 1e-12);
    }
  }
}

TEST_CASE("anagram construction from half phases") {
  const std::vector<double> half{1.0, 2.0, 3.0};
  const CompositeSequence s = CompositeSequence::from_half_phases(half);
  const std::vector<double> expected{0.0, 1.0, 2.0, 3.0, 2.0, 1.0, 0.0};
  CHECK(s.phases() == expected);
  CHECK(s.is_anagram());
  CHECK(s.half_phases() == half);
  CHECK_FALSE(CompositeSequence({0.0, 1.0, 2.0}).is_anagram());
  CHECK_THROWS_AS(CompositeSequence({0.0, 1.0, 2.0}).half_phases(), ContractViolation);
  CHECK_THROWS_AS(CompositeSequence({0.0, 1.0}).half_phases(), ContractViolation);
  CHECK_THROWS(CompositeSequence(std::vector<double>{}));
}

TEST_CASE("target phase examples") {
  CHECK(target_phase(CompositeSequence({0.0})) == doctest::Approx(0.5 * kPi).epsilon(1e-14));
  CHECK(target_phase(catalog("B3")) == doctest::Approx(0.85 * kPi).epsilon(1e-12));
  CHECK(target_phase(catalog("N5")) == doctest::Approx(0.76 * kPi).epsilon(1e-12));
  CHECK_THROWS_AS(target_phase(CompositeSequence({0.0, 1.0, 2.0})), ContractViolation);
}

TEST_CASE("target phase equals the argument of u21 at pi") {
  for (const char* name : {"N5", "N9", "N13", "N17", "N5o", "N9o", "N13o", "B3"}) {
    const CompositeSequence seq = catalog(name);
    const double arg = reduce_angle(std::arg(sequence_propagator(seq, kPi).u21));
    const double diff = reduce_angle(arg - target_phase(seq));
    CHECK(std::min(diff, kTwoPi - diff) <= 1e-10);
  }
}

TEST_CASE("reduce_angle lands in [0, 2 pi)") {
  for (double a : {-7.0, -kTwoPi, 0.0, 3.0, kTwoPi, 13.0}) {
    const double r = reduce_angle(a);
    CHECK(r >= 0.0);
    CHECK(r < kTwoPi);
    CHECK(std::abs(std::remainder(r - a, kTwoPi)) <= 1e-12);
  }
}
