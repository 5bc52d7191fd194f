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

#include "cnot/composite_design.hpp"

#include <algorithm>
#include <cmath>

#include "cnot/detail/nb_solver.hpp"
#include "cnot/error.hpp"
#include "cnot/trig_polynomial.hpp"

namespace cnot {

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"N5", {1.160, 0.580}, SequenceFamily::nb_standard},
      {"N9", {1.130, 0.820, 0.110, 1.390}, SequenceFamily::nb_standard},
      {"N13", {1.270, 0.440, 1.020, 0.770, 1.850, 1.730}, SequenceFamily::nb_standard},
      {"N17",
       {1.600, 0.550, 1.090, 0.890, 0.620, 1.540, 0.150, 1.570},
       SequenceFamily::nb_standard},
      {"N21",
       {1.070, 0.920, 0.130, 1.830, 1.160, 0.720, 0.100, 1.520, 0.810, 1.950},
       SequenceFamily::nb_standard},
      {"N25",
       {1.750, 0.380, 1.420, 0.710, 1.070, 0.910, 0.780, 1.470, 0.550, 1.740, 0.160, 1.650},
       SequenceFamily::nb_standard},
      {"N5o", {1.190, 0.630}, SequenceFamily::nb_optimized},
      {"N9o", {1.157, 0.888, 0.218, 1.529}, SequenceFamily::nb_optimized},
      {"N13o", {0.585, 1.352, 0.914, 1.186, 0.020, 0.089}, SequenceFamily::nb_optimized},
      {"B3", {0.65}, SequenceFamily::broadband},
  };
  return entries;
}

CompositeSequence catalog(std::string_view name) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.name == name) {
      std::vector<double> half(e.half_phases_pi.size());
      std::transform(e.half_phases_pi.begin(), e.half_phases_pi.end(), half.begin(),
                     [](double x) { return x * kPi; });
      return CompositeSequence::from_half_phases(half, e.name);
    }
  }
  throw LookupError("unknown catalog sequence '" + std::string(name) + "'");
}

Complex u11_area_derivative(const CompositeSequence& sequence, int order, double at_area) {
  if (order < 0) throw ContractViolation("derivative order must be non-negative");
  const auto poly = detail::sequence_polynomial<double>(sequence.phases());
  return poly.entry_derivative(0, 0, order, at_area);
}

std::vector<ConditionResidual> nb_residuals(const CompositeSequence& sequence) {
  const std::vector<double> half = sequence.half_phases();
  if (sequence.phases().front() != 0.0) {
    throw ContractViolation("NB conditions are defined for phi_1 = phi_N = 0");
  }
  const auto poly = detail::sequence_polynomial<double>(sequence.phases());
  const double half_n = 0.5 * static_cast<double>(sequence.size());
  std::vector<ConditionResidual> out;
  out.reserve(half.size());
  for (std::size_t c = 0; c < half.size(); ++c) {
    const int order = static_cast<int>(2 * (c + 1));
    const Complex value = poly.entry_derivative(0, 0, order, kTwoPi);
    out.push_back({order, value, std::abs(value) / std::pow(half_n, order)});
  }
  return out;
}

double nb_residual_norm(const CompositeSequence& sequence) {
  double acc = 0.0;
  for (const ConditionResidual& r : nb_residuals(sequence)) acc += r.normalized * r.normalized;
  return std::sqrt(acc);
}

NbSolution solve_nb(int m, std::span<const double> seed, const NbSolverOptions& options) {
  if (m < 1) throw ContractViolation("NB solver needs m >= 1");
  if (seed.size() != static_cast<std::size_t>(m)) {
    throw ContractViolation("NB solver seed must hold exactly m half-phases");
  }
  auto outcome = detail::newton_nb<double>(std::vector<double>(seed.begin(), seed.end()),
                                           options.tolerance, options.max_iterations);
  for (double& h : outcome.half) h = reduce_angle(h);
  return {CompositeSequence::from_half_phases(outcome.half, "N" + std::to_string(2 * m + 1)),
          outcome.residual_norm, outcome.iterations};
}

CompositeSequence solve_nb_phases(int m, std::span<const double> seed,
                                  const NbSolverOptions& options) {
  return solve_nb(m, seed, options).sequence;
}

namespace {

double probability_at(const CompositeSequence& sequence, double area) {
  return transition_probability(sequence_propagator(sequence, area));
}

// Distance from `center`, walking in direction `dir` on a 1e-3 rad grid and
// then bisecting, at which `inside` first fails. Capped at pi.
template <class Inside>
double edge_distance(double center, double dir, Inside inside) {
  constexpr double kStep = 1e-3;
  constexpr double kReach = kPi;
  double last_in = 0.0;
  double d = kStep;
  for (; d <= kReach; d += kStep) {
    if (!inside(center + dir * d)) break;
    last_in = d;
  }
  if (d > kReach) return kReach;
  double lo = last_in;
  double hi = d;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (inside(center + dir * mid) ? lo : hi) = mid;
  }
  return lo;
}

void check_threshold(double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw ConfigurationError("profile threshold must lie in (0, 1)");
  }
}

}  // namespace

double flat_bottom_width(const CompositeSequence& sequence, double threshold) {
  check_threshold(threshold);
  auto inside = [&](double a) { return probability_at(sequence, a) <= threshold; };
  if (!inside(kTwoPi)) return 0.0;
  return edge_distance(kTwoPi, -1.0, inside) + edge_distance(kTwoPi, 1.0, inside);
}

double flat_top_width(const CompositeSequence& sequence, double threshold) {
  check_threshold(threshold);
  auto inside = [&](double a) { return probability_at(sequence, a) >= 1.0 - threshold; };
  if (!inside(kPi)) return 0.0;
  return edge_distance(kPi, -1.0, inside) + edge_distance(kPi, 1.0, inside);
}

}  // namespace cnot
