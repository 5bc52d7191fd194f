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

#include "cnot/gate_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "cnot/composite_design.hpp"
#include "cnot/error.hpp"
#include "cnot/ion_coupling.hpp"

namespace cnot {

ChainSpec::ChainSpec(int n_controls, int v0, double eta, int phonon_cutoff)
    : n_controls_(n_controls),
      v0_(v0),
      eta_(eta),
      phonon_cutoff_(phonon_cutoff == 0 ? v0 + n_controls + 6 : phonon_cutoff) {
  if (n_controls_ < 0 || n_controls_ > 20) {
    throw ConfigurationError("number of control ions must lie in [0, 20]");
  }
  if (v0_ < n_controls_ + 1) {
    throw ConfigurationError("initial phonon number v0 must be at least n + 1");
  }
  if (phonon_cutoff_ < v0_ + n_controls_ + 4) {
    throw ConfigurationError("phonon cutoff must be at least v0 + n + 4");
  }
  static_cast<void>(LambDicke{eta});
}

JointState::JointState(int num_ions, int phonon_cutoff)
    : num_ions_(num_ions), cutoff_(phonon_cutoff) {
  if (num_ions < 1 || num_ions > 24 || phonon_cutoff < 1) {
    throw ConfigurationError("joint state needs 1..24 ions and a positive phonon cutoff");
  }
  amps_.assign(num_configs() * stride(), Complex{0.0});
}

JointState JointState::basis(int num_ions, int phonon_cutoff, std::size_t config, int v) {
  JointState s(num_ions, phonon_cutoff);
  if (config >= s.num_configs() || v < 0 || v >= phonon_cutoff) {
    throw ContractViolation("basis state outside the joint space");
  }
  s.at(config, v) = 1.0;
  return s;
}

double JointState::norm() const {
  double acc = 0.0;
  for (const Complex& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

double JointState::population_from_level(int level) const {
  double acc = 0.0;
  for (std::size_t c = 0; c < num_configs(); ++c) {
    for (int v = std::max(level, 0); v < cutoff_; ++v) acc += std::norm(at(c, v));
  }
  return acc;
}

double JointState::config_population(std::size_t config) const {
  double acc = 0.0;
  for (int v = 0; v < cutoff_; ++v) acc += std::norm(at(config, v));
  return acc;
}

double JointState::phonon_population(int v) const {
  double acc = 0.0;
  for (std::size_t c = 0; c < num_configs(); ++c) acc += std::norm(at(c, v));
  return acc;
}

std::size_t JointState::ion_mask(int ion) const {
  if (ion < 1 || ion > num_ions_) {
    throw ContractViolation("ion index " + std::to_string(ion) + " outside [1, " +
                            std::to_string(num_ions_) + "]");
  }
  return std::size_t{1} << (num_ions_ - ion);
}

void JointState::clear() { std::fill(amps_.begin(), amps_.end(), Complex{0.0}); }

namespace {

// cos/sin of the half area seen by each lower phonon number v.
struct RotationTable {
  int sideband = 1;
  std::vector<double> cos_half;
  std::vector<double> sin_half;
};

RotationTable rotation_table(double eta, int sideband, double base_area, int reference_v,
                             int cutoff) {
  const LambDicke ld(eta);
  const double ref = sideband_coupling(ld, reference_v, sideband);
  if (ref == 0.0) {
    throw ConfigurationError("reference transition coupling vanishes at eta = " +
                             std::to_string(eta));
  }
  RotationTable t;
  t.sideband = sideband;
  t.cos_half.resize(static_cast<std::size_t>(cutoff));
  t.sin_half.resize(static_cast<std::size_t>(cutoff));
  for (int v = 0; v < cutoff; ++v) {
    const double area = base_area * sideband_coupling(ld, v, sideband) / ref;
    t.cos_half[static_cast<std::size_t>(v)] = std::cos(0.5 * area);
    t.sin_half[static_cast<std::size_t>(v)] = std::sin(0.5 * area);
  }
  return t;
}

void check_truncation(const JointState& state) {
  const double top = state.population_from_level(state.phonon_cutoff() - 2);
  if (top > kTruncationTolerance) {
    throw TruncationError("population " + std::to_string(top) +
                              " reached the top Fock levels; increase the phonon cutoff above " +
                              std::to_string(state.phonon_cutoff()),
                          static_cast<std::size_t>(state.phonon_cutoff()));
  }
}

void rotate(JointState& state, std::size_t mask, const RotationTable& table, double phase) {
  const int s = table.sideband;
  const int cutoff = state.phonon_cutoff();
  const Complex i{0.0, 1.0};
  const Complex up_factor = i * std::polar(1.0, -phase);
  const Complex down_factor = i * std::polar(1.0, phase);
  for (std::size_t conf = 0; conf < state.num_configs(); ++conf) {
    if (conf & mask) continue;
    const std::size_t excited = conf | mask;
    for (int v = 0; v + s < cutoff; ++v) {
      Complex& a0 = state.at(conf, v);
      Complex& a1 = state.at(excited, v + s);
      const double c = table.cos_half[static_cast<std::size_t>(v)];
      const double sn = table.sin_half[static_cast<std::size_t>(v)];
      const Complex lower = c * a0 + sn * (up_factor * a1);
      a1 = sn * (down_factor * a0) + c * a1;
      a0 = lower;
    }
  }
}

void run_sequence(JointState& state, std::size_t mask, const RotationTable& table,
                  const CompositeSequence& seq) {
  for (double phase : seq.phases()) {
    rotate(state, mask, table, phase);
    check_truncation(state);
  }
}

void check_state_layout(const JointState& state, const ChainSpec& spec) {
  if (state.num_ions() != spec.num_ions() || state.phonon_cutoff() != spec.phonon_cutoff()) {
    throw ContractViolation("joint state layout does not match the chain spec");
  }
}

// Amplitudes of one input restricted to J = v - popcount(conf) in
// [j0 - 1, j0 + 1], stored three per configuration.
class SectorState {
 public:
  SectorState(int num_ions, int cutoff)
      : num_configs_(std::size_t{1} << num_ions), cutoff_(cutoff), amps_(num_configs_ * 3) {
    pops_.resize(num_configs_);
    for (std::size_t c = 0; c < num_configs_; ++c) pops_[c] = std::popcount(c);
  }

  // Starts from |config>|j0 + popcount(config)>.
  void reset(std::size_t config, int j0) {
    std::fill(amps_.begin(), amps_.end(), Complex{0.0});
    j0_ = j0;
    amps_[config * 3 + 1] = 1.0;
  }

  // Rotates every pair whose lower state has J in [j_lo, j_hi].
  void rotate(std::size_t mask, const RotationTable& table, double phase, int j_lo, int j_hi) {
    const int s = table.sideband;
    const Complex i{0.0, 1.0};
    const Complex up_factor = i * std::polar(1.0, -phase);
    const Complex down_factor = i * std::polar(1.0, phase);
    const std::size_t low_bits = mask - 1;
    for (std::size_t k = 0; k < num_configs_ / 2; ++k) {
      const std::size_t conf = ((k & ~low_bits) << 1) | (k & low_bits);
      const std::size_t excited = conf | mask;
      const int pop = pops_[conf];
      for (int j = j_lo; j <= j_hi; ++j) {
        const int v = j + pop;
        if (v < 0 || v + s > cutoff_ - 1) continue;
        const int j_up = j + s - 1;
        if (j_up > j0_ + 1) continue;
        Complex& a0 = amps_[conf * 3 + static_cast<std::size_t>(j - j0_ + 1)];
        Complex& a1 = amps_[excited * 3 + static_cast<std::size_t>(j_up - j0_ + 1)];
        const double c = table.cos_half[static_cast<std::size_t>(v)];
        const double sn = table.sin_half[static_cast<std::size_t>(v)];
        const Complex lower = c * a0 + sn * (up_factor * a1);
        a1 = sn * (down_factor * a0) + c * a1;
        a0 = lower;
      }
    }
  }

  void run(std::size_t mask, const RotationTable& table, const CompositeSequence& seq, int j_lo,
           int j_hi) {
    for (double phase : seq.phases()) {
      rotate(mask, table, phase, j_lo, j_hi);
      check_truncation();
    }
  }

  // Amplitude of (config, v), zero outside the band.
  Complex at(std::size_t config, int v) const {
    const int j = v - pops_[config];
    if (j < j0_ - 1 || j > j0_ + 1) return 0.0;
    return amps_[config * 3 + static_cast<std::size_t>(j - j0_ + 1)];
  }

 private:
  void check_truncation() const {
    // Highest populated level is j0 + 1 + popcount; skip when out of reach.
    const int top = cutoff_ - 2;
    if (j0_ + 1 + static_cast<int>(std::bit_width(num_configs_) - 1) < top) return;
    double acc = 0.0;
    for (std::size_t c = 0; c < num_configs_; ++c) {
      for (int d = 0; d < 3; ++d) {
        const int v = j0_ - 1 + d + pops_[c];
        if (v >= top) acc += std::norm(amps_[c * 3 + static_cast<std::size_t>(d)]);
      }
    }
    if (acc > kTruncationTolerance) {
      throw TruncationError("population " + std::to_string(acc) +
                                " reached the top Fock levels; increase the phonon cutoff above " +
                                std::to_string(cutoff_),
                            static_cast<std::size_t>(cutoff_));
    }
  }

  std::size_t num_configs_;
  int cutoff_;
  int j0_ = 0;
  std::vector<Complex> amps_;
  std::vector<int> pops_;
};

GateSimulation simulate_with_cutoff(const ChainSpec& spec, const CompositeSequence& nb,
                                    double area_scale, const CompositeSequence& bb) {
  const int cutoff = spec.phonon_cutoff();
  const int ions = spec.num_ions();
  const RotationTable dress =
      rotation_table(spec.eta(), 1, kPi, spec.dressing_reference_v(), cutoff);
  const RotationTable cond =
      rotation_table(spec.eta(), 2, area_scale * kPi, spec.conditional_reference_v(), cutoff);

  SectorState state(ions, cutoff);
  std::vector<std::size_t> masks;
  for (int ion = 1; ion <= ions; ++ion) masks.push_back(std::size_t{1} << (ions - ion));
  const std::size_t dim = std::size_t{1} << ions;
  const int v0 = spec.v0();

  GateSimulation out{GateMatrix(dim), 0.0, 0.0, cutoff};
  double leak_sum = 0.0;
  for (std::size_t input = 0; input < dim; ++input) {
    // Dressing conserves J = v - n_1; the conditional step moves it by at
    // most one in either direction.
    const int j0 = v0 - std::popcount(input);
    state.reset(input, j0);
    for (std::size_t mask : masks) state.run(mask, dress, bb, j0, j0);
    state.run(masks.back(), cond, nb, j0 - 1, j0);
    for (std::size_t mask : masks) state.run(mask, dress, bb, j0 - 1, j0 + 1);
    double kept = 0.0;
    for (std::size_t row = 0; row < dim; ++row) {
      const Complex a = state.at(row, v0);
      out.matrix(row, input) = a;
      kept += std::norm(a);
    }
    const double leak = std::max(0.0, 1.0 - kept);
    out.max_leakage = std::max(out.max_leakage, leak);
    leak_sum += leak;
  }
  out.mean_leakage = leak_sum / static_cast<double>(dim);
  return out;
}

}  // namespace

void apply_sideband_pulse(JointState& state, const SidebandPulse& pulse, const ChainSpec& spec) {
  check_state_layout(state, spec);
  const std::size_t mask = state.ion_mask(pulse.ion);
  const RotationTable table = rotation_table(spec.eta(), pulse.sideband, pulse.base_area,
                                             pulse.reference_v, state.phonon_cutoff());
  rotate(state, mask, table, pulse.phase);
  check_truncation(state);
}

void dressing_step(JointState& state, const ChainSpec& spec, const CompositeSequence& bb) {
  check_state_layout(state, spec);
  const RotationTable table =
      rotation_table(spec.eta(), 1, kPi, spec.dressing_reference_v(), spec.phonon_cutoff());
  for (int ion = 1; ion <= spec.num_ions(); ++ion) {
    run_sequence(state, state.ion_mask(ion), table, bb);
  }
}

void conditional_step(JointState& state, const ChainSpec& spec, const CompositeSequence& nb,
                      double area_scale) {
  check_state_layout(state, spec);
  const RotationTable table = rotation_table(spec.eta(), 2, area_scale * kPi,
                                             spec.conditional_reference_v(), spec.phonon_cutoff());
  run_sequence(state, state.ion_mask(spec.num_ions()), table, nb);
}

const CompositeSequence& default_dressing() {
  static const CompositeSequence bb = catalog("B3");
  return bb;
}

GateMatrix::GateMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{0.0}) {}

GateMatrix GateMatrix::identity(std::size_t dim) {
  GateMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
  return m;
}

double GateMatrix::spectral_norm() const {
  std::vector<Complex> x(dim_, Complex{1.0});
  std::vector<Complex> y(dim_);
  double lambda = 0.0;
  for (int it = 0; it < 500; ++it) {
    // y = M x, x' = M^dagger y
    for (std::size_t r = 0; r < dim_; ++r) {
      Complex acc{0.0};
      for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * x[c];
      y[r] = acc;
    }
    double nrm = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) {
      Complex acc{0.0};
      for (std::size_t r = 0; r < dim_; ++r) acc += std::conj((*this)(r, c)) * y[r];
      x[c] = acc;
      nrm += std::norm(acc);
    }
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) return 0.0;
    for (Complex& v : x) v /= nrm;
    if (std::abs(nrm - lambda) <= 1e-15 * nrm) {
      lambda = nrm;
      break;
    }
    lambda = nrm;
  }
  return std::sqrt(lambda);
}

Complex GateMatrix::overlap_trace(const GateMatrix& other) const {
  if (other.dim_ != dim_) throw DimensionMismatch("gate matrices differ in dimension");
  Complex acc{0.0};
  for (std::size_t k = 0; k < data_.size(); ++k) acc += std::conj(data_[k]) * other.data_[k];
  return acc;
}

GateMatrix GateMatrix::operator*(const GateMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw DimensionMismatch("gate matrices differ in dimension");
  GateMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{0.0}) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

GateMatrix GateMatrix::adjoint() const {
  GateMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

GateSimulation simulate_gate(const ChainSpec& spec, const CompositeSequence& nb, double area_scale,
                             const CompositeSequence& bb) {
  ChainSpec current = spec;
  for (int attempt = 0;; ++attempt) {
    try {
      return simulate_with_cutoff(current, nb, area_scale, bb);
    } catch (const TruncationError&) {
      if (attempt == 4) throw;
      current = current.with_cutoff(current.phonon_cutoff() + (current.phonon_cutoff() + 1) / 2);
    }
  }
}

GateMatrix reference_gate(int n, double alpha, double beta) {
  if (n < 0 || n > 20) throw ConfigurationError("reference gate order must lie in [0, 20]");
  const std::size_t dim = std::size_t{1} << (n + 1);
  GateMatrix c(dim);
  const std::size_t a = dim - 2;
  const std::size_t b = dim - 1;
  for (std::size_t k = 0; k < a; ++k) c(k, k) = std::polar(1.0, beta);
  c(a, b) = std::polar(1.0, -alpha);
  c(b, a) = std::polar(1.0, alpha);
  return c;
}

double average_fidelity(const GateMatrix& simulated, const GateMatrix& ideal) {
  if (simulated.dim() != ideal.dim()) {
    throw DimensionMismatch("fidelity needs matrices of equal dimension");
  }
  const double d = static_cast<double>(simulated.dim());
  return (d + std::norm(simulated.overlap_trace(ideal))) / (d * (d + 1.0));
}

ReferencePhases analytic_reference_phases(const CompositeSequence& nb, const CompositeSequence& bb) {
  const SU2Matrix dressing = sequence_propagator(bb, kPi);
  const double alpha = -0.5 * kPi - 2.0 * std::arg(dressing.u12) - target_phase(nb);
  return {reduce_angle(alpha), 0.5 * kPi};
}

FidelityResult fidelity_against_reference(const GateMatrix& simulated, const CompositeSequence& nb,
                                          const CompositeSequence& bb) {
  const std::size_t dim = simulated.dim();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw DimensionMismatch("gate matrix dimension must be a power of two");
  }
  const std::size_t a = dim - 2;
  const std::size_t b = dim - 1;
  // Tr(S^dagger C) = T e^{i beta} + X e^{-i alpha} + Y e^{i alpha}.
  Complex t{0.0};
  for (std::size_t k = 0; k < a; ++k) t += std::conj(simulated(k, k));
  const Complex x = std::conj(simulated(a, b));
  const Complex y = std::conj(simulated(b, a));
  const double alpha = 0.5 * (std::arg(x) - std::arg(y));
  const double common = std::arg(x) - alpha;
  const double beta = common - std::arg(t);

  FidelityResult r;
  const double d = static_cast<double>(dim);
  const double overlap = std::abs(t) + std::abs(x) + std::abs(y);
  r.best = std::min(1.0, (d + overlap * overlap) / (d * (d + 1.0)));
  r.best_phases = {reduce_angle(alpha), reduce_angle(beta)};
  r.analytic_phases = analytic_reference_phases(nb, bb);
  const int n = std::countr_zero(dim) - 1;
  r.analytic = average_fidelity(
      simulated, reference_gate(n, r.analytic_phases.alpha, r.analytic_phases.beta));
  return r;
}

FidelityResult gate_fidelity(const ChainSpec& spec, const CompositeSequence& nb, double area_scale,
                             const CompositeSequence& bb) {
  const GateSimulation sim = simulate_gate(spec, nb, area_scale, bb);
  FidelityResult r = fidelity_against_reference(sim.matrix, nb, bb);
  r.max_leakage = sim.max_leakage;
  return r;
}

}  // namespace cnot
