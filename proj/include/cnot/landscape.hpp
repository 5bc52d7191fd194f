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
#include <string>
#include <vector>

#include "cnot/error.hpp"
#include "cnot/gate_engine.hpp"
#include "cnot/su2_pulse.hpp"

namespace cnot {

/// Inclusive uniform axis [min, max] with `count` samples.
struct Axis {
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 2;

  /// Throws ConfigurationError unless min < max and count >= 2.
  void validate(const std::string& name) const;
  std::vector<double> values() const;
};

/// F* sampled on an (eta, area_scale) grid, row-major over eta then area_scale.
struct FidelityGrid {
  std::vector<double> etas;
  std::vector<double> area_scales;
  std::vector<double> fidelity;
  int n_controls = 0;
  int v0 = 0;
  std::string sequence_label;

  std::size_t rows() const noexcept { return etas.size(); }
  std::size_t cols() const noexcept { return area_scales.size(); }
  double at(std::size_t eta_index, std::size_t area_index) const {
    return fidelity[eta_index * cols() + area_index];
  }
};

/// A failing grid cell, carrying the category of the underlying error.
class ScanCellError : public Error {
 public:
  ScanCellError(const Error& cause, double eta, double area_scale);
  double eta() const noexcept { return eta_; }
  double area_scale() const noexcept { return area_scale_; }

 private:
  double eta_;
  double area_scale_;
};

/// Worker count from CNOT_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned default_thread_count();

struct ScanOptions {
  /// 0 selects default_thread_count().
  unsigned threads = 0;
};

/// `template_spec` supplies n, v0 and the cutoff; its eta is ignored.
FidelityGrid scan_fidelity(const ChainSpec& template_spec, const CompositeSequence& nb,
                           const Axis& eta, const Axis& area_scale,
                           const ScanOptions& options = {});

struct RegionSummary {
  double threshold = 0.0;
  bool empty = true;
  // Argmax of the whole grid, reported even when the region is empty.
  double best_eta = 0.0;
  double best_area_scale = 0.0;
  double best_fidelity = 0.0;
  // Bounding box and centroid of the 4-connected super-threshold component
  // through the argmax; meaningful only when !empty.
  double eta_lo = 0.0;
  double eta_hi = 0.0;
  double area_lo = 0.0;
  double area_hi = 0.0;
  double eta_centroid = 0.0;
  double area_centroid = 0.0;
  std::size_t cells = 0;
};

RegionSummary best_region(const FidelityGrid& grid, double threshold);

/// Rectangle in the (eta, area_scale) plane.
struct Window {
  double eta_lo = 0.0;
  double eta_hi = 0.0;
  double area_lo = 0.0;
  double area_hi = 0.0;
};

/// Bounding box of a non-empty region. Throws ContractViolation when empty.
Window region_window(const RegionSummary& region);

/// Mean of 1 - F* over a points x points sub-grid of the window.
double window_infidelity(const ChainSpec& template_spec, const CompositeSequence& nb,
                         const Window& window, std::size_t points, const ScanOptions& options = {});

struct OptimizerOptions {
  int max_evaluations = 2000;
  std::size_t window_points = 8;
  double initial_step = 0.02 * kPi;
  ScanOptions scan;
};

struct OptimizationResult {
  CompositeSequence sequence;
  double seed_objective = 0.0;
  double objective = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead over the half-phases of an anagram seed, minimizing
/// window_infidelity. The result is never worse than the seed.
OptimizationResult optimize_phases(const ChainSpec& template_spec, const CompositeSequence& seed,
                                   const Window& window, const OptimizerOptions& options = {});

/// Excitation of a neighbouring ion that sees the fraction r of the
/// per-pulse area area_scale * pi.
double addressing_selectivity(const CompositeSequence& sequence, double leak_fraction,
                              double area_scale);

}  // namespace cnot
