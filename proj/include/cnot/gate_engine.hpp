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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cnot/su2_pulse.hpp"

namespace cnot {

/// Ion chain of n control ions plus one target ion (the last ion), all
/// coupled to one phonon mode prepared in the Fock state |v0>.
class ChainSpec {
 public:
  /// phonon_cutoff = 0 selects the default v0 + n + 6. Requires
  /// n_controls >= 0, v0 >= n + 1 and phonon_cutoff >= v0 + n + 4.
  ChainSpec(int n_controls, int v0, double eta, int phonon_cutoff = 0);

  int n_controls() const noexcept { return n_controls_; }
  int num_ions() const noexcept { return n_controls_ + 1; }
  int v0() const noexcept { return v0_; }
  double eta() const noexcept { return eta_; }
  int phonon_cutoff() const noexcept { return phonon_cutoff_; }

  ChainSpec with_eta(double eta) const { return {n_controls_, v0_, eta, phonon_cutoff_}; }
  ChainSpec with_cutoff(int cutoff) const { return {n_controls_, v0_, eta_, cutoff}; }

  /// Lower phonon number of the first-sideband transition calibrated to an
  /// exact pi pulse during dressing: v0 - 1.
  int dressing_reference_v() const noexcept { return v0_ - 1; }
  /// Lower phonon number of the weakest second-sideband transition, the one
  /// that must see a pi pulse: v0 - n - 1.
  int conditional_reference_v() const noexcept { return v0_ - n_controls_ - 1; }

 private:
  int n_controls_;
  int v0_;
  double eta_;
  int phonon_cutoff_;
};

/// Dense amplitudes over (qubit configuration, phonon number). Ion 1 is the
/// most significant bit of the configuration index, the target ion the
/// least significant one.
class JointState {
 public:
  JointState(int num_ions, int phonon_cutoff);

  static JointState basis(int num_ions, int phonon_cutoff, std::size_t config, int v);

  int num_ions() const noexcept { return num_ions_; }
  int phonon_cutoff() const noexcept { return cutoff_; }
  std::size_t num_configs() const noexcept { return std::size_t{1} << num_ions_; }

  Complex& at(std::size_t config, int v) { return amps_[config * stride() + index(v)]; }
  const Complex& at(std::size_t config, int v) const { return amps_[config * stride() + index(v)]; }

  std::span<Complex> amplitudes() noexcept { return amps_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  double norm() const;
  /// Total population with phonon number >= level.
  double population_from_level(int level) const;
  /// Population of configuration `config` summed over phonon numbers.
  double config_population(std::size_t config) const;
  /// Population of phonon number v summed over configurations.
  double phonon_population(int v) const;

  /// Bit mask of ion `ion` (1-based).
  std::size_t ion_mask(int ion) const;

  void clear();

 private:
  std::size_t stride() const noexcept { return static_cast<std::size_t>(cutoff_); }
  static std::size_t index(int v) { return static_cast<std::size_t>(v); }

  int num_ions_;
  int cutoff_;
  std::vector<Complex> amps_;
};

/// One blue-sideband pulse: every transition |0>_ion|v> <-> |1>_ion|v+s>
/// sees the area base_area * Omega_{v,v+s} / Omega_{reference_v,reference_v+s}.
struct SidebandPulse {
  int ion = 1;
  int sideband = 1;
  double base_area = 0.0;
  int reference_v = 0;
  double phase = 0.0;
};

/// Population left on the two highest Fock levels beyond which a
/// simulation is rejected as truncated.
inline constexpr double kTruncationTolerance = 1e-12;

/// Applies the pulse in place. Throws TruncationError if population reaches
/// the top two Fock levels, ContractViolation for a bad ion index.
void apply_sideband_pulse(JointState& state, const SidebandPulse& pulse, const ChainSpec& spec);

/// Step 2 / Step 4: the broadband sequence on every ion in ascending order,
/// first sideband, calibrated so that (v0-1 -> v0) sees exactly pi per pulse.
void dressing_step(JointState& state, const ChainSpec& spec, const CompositeSequence& bb);

/// Step 3: the narrowband sequence on the target ion, second sideband, with
/// the weakest transition (v0-n-1 -> v0-n+1) at area_scale * pi per pulse.
void conditional_step(JointState& state, const ChainSpec& spec, const CompositeSequence& nb,
                      double area_scale);

/// Broadband dressing sequence B3 = (0, 0.65 pi, 0).
const CompositeSequence& default_dressing();

/// Square complex matrix, row-major.
class GateMatrix {
 public:
  explicit GateMatrix(std::size_t dim);
  static GateMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> data() const noexcept { return data_; }

  /// Largest singular value, by power iteration on M^dagger M.
  double spectral_norm() const;
  /// Tr(this^dagger * other).
  Complex overlap_trace(const GateMatrix& other) const;
  GateMatrix operator*(const GateMatrix& rhs) const;
  GateMatrix adjoint() const;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

struct GateSimulation {
  GateMatrix matrix;
  /// 1 - (population returned to the |v0> sector), per input basis state.
  double max_leakage = 0.0;
  double mean_leakage = 0.0;
  /// Fock cutoff the simulation finally ran with.
  int phonon_cutoff = 0;
};

/// Dressing, conditional step and undressing on every computational basis
/// state tensored with |v0>, projected back onto |v0>. The cutoff grows
/// (x1.5, at most four times) if the initial one truncates.
GateSimulation simulate_gate(const ChainSpec& spec, const CompositeSequence& nb,
                             double area_scale,
                             const CompositeSequence& bb = default_dressing());

/// C^n-NOT on n+1 qubits with phase convention: e^{i beta} on every
/// non-conditional diagonal entry, <1..10|C|1..11> = e^{-i alpha} and
/// <1..11|C|1..10> = e^{+i alpha}.
GateMatrix reference_gate(int n, double alpha, double beta);

/// Haar-average fidelity (d + |Tr(S^dagger C)|^2) / (d (d+1)).
double average_fidelity(const GateMatrix& simulated, const GateMatrix& ideal);

struct ReferencePhases {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Reference-gate phases predicted by exact-pi algebra: beta = pi/2 and
/// alpha = -pi/2 - 2 arg(b12) - target_phase(nb), with b12 the upper
/// off-diagonal entry of the dressing sequence at A = pi.
ReferencePhases analytic_reference_phases(const CompositeSequence& nb,
                                          const CompositeSequence& bb = default_dressing());

struct FidelityResult {
  /// Fidelity maximized over both reference phases.
  double best = 0.0;
  ReferencePhases best_phases;
  /// Fidelity at analytic_reference_phases.
  double analytic = 0.0;
  ReferencePhases analytic_phases;
  double max_leakage = 0.0;
};

/// Closed-form maximization over (alpha, beta) for a simulated matrix.
FidelityResult fidelity_against_reference(const GateMatrix& simulated, const CompositeSequence& nb,
                                          const CompositeSequence& bb = default_dressing());

FidelityResult gate_fidelity(const ChainSpec& spec, const CompositeSequence& nb, double area_scale,
                             const CompositeSequence& bb = default_dressing());

}  // namespace cnot
