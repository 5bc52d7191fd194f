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

#include "cnot/landscape.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

#include "cnot/simplex.hpp"

namespace cnot {

void Axis::validate(const std::string& name) const {
  if (!(min < max)) throw ConfigurationError(name + ": range minimum must be below its maximum");
  if (count < 2) throw ConfigurationError(name + ": range needs at least 2 samples");
}

std::vector<double> Axis::values() const {
  std::vector<double> v(count);
  const double step = (max - min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = i + 1 == count ? max : min + step * static_cast<double>(i);
  }
  return v;
}

namespace {

std::string describe_cell(const Error& cause, double eta, double area) {
  std::ostringstream os;
  os << "cell (eta=" << eta << ", area_scale=" << area << "): " << cause.what();
  return os.str();
}

struct Point {
  double eta;
  double area_scale;
};

// F* at every point; results land by index so scheduling cannot change them.
std::vector<double> evaluate_points(const ChainSpec& template_spec, const CompositeSequence& nb,
                                    const std::vector<Point>& points, unsigned threads) {
  std::vector<double> out(points.size(), 0.0);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::optional<std::size_t> error_index;
  std::exception_ptr error;

  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < points.size(); k = next.fetch_add(1)) {
      try {
        const ChainSpec spec = template_spec.with_eta(points[k].eta);
        out[k] = gate_fidelity(spec, nb, points[k].area_scale).best;
      } catch (const Error& e) {
        std::lock_guard lock(error_mutex);
        if (!error_index || k < *error_index) {
          error_index = k;
          error = std::make_exception_ptr(ScanCellError(e, points[k].eta, points[k].area_scale));
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error_index || k < *error_index) {
          error_index = k;
          error = std::current_exception();
        }
      }
    }
  };

  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(threads == 0 ? default_thread_count() : threads,
                                      static_cast<unsigned>(points.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

ScanCellError::ScanCellError(const Error& cause, double eta, double area_scale)
    : Error(cause.kind(), describe_cell(cause, eta, area_scale)),
      eta_(eta),
      area_scale_(area_scale) {}

unsigned default_thread_count() {
  if (const char* env = std::getenv("CNOT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

FidelityGrid scan_fidelity(const ChainSpec& template_spec, const CompositeSequence& nb,
                           const Axis& eta, const Axis& area_scale, const ScanOptions& options) {
  eta.validate("eta");
  area_scale.validate("area_scale");
  if (!(eta.min > 0.0)) throw ConfigurationError("eta: range must be strictly positive");
  FidelityGrid grid;
  grid.etas = eta.values();
  grid.area_scales = area_scale.values();
  grid.n_controls = template_spec.n_controls();
  grid.v0 = template_spec.v0();
  grid.sequence_label = nb.label();
  std::vector<Point> points;
  points.reserve(grid.rows() * grid.cols());
  for (double e : grid.etas) {
    for (double a : grid.area_scales) points.push_back({e, a});
  }
  grid.fidelity = evaluate_points(template_spec, nb, points, options.threads);
  return grid;
}

RegionSummary best_region(const FidelityGrid& grid, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw ConfigurationError("region threshold must lie in (0, 1)");
  }
  RegionSummary r;
  r.threshold = threshold;
  if (grid.fidelity.empty()) return r;
  const auto best_it = std::max_element(grid.fidelity.begin(), grid.fidelity.end());
  const auto best = static_cast<std::size_t>(best_it - grid.fidelity.begin());
  const std::size_t cols = grid.cols();
  r.best_eta = grid.etas[best / cols];
  r.best_area_scale = grid.area_scales[best % cols];
  r.best_fidelity = *best_it;
  if (*best_it < threshold) return r;

  std::vector<char> seen(grid.fidelity.size(), 0);
  std::deque<std::size_t> queue{best};
  seen[best] = 1;
  std::size_t i_lo = best / cols, i_hi = i_lo, j_lo = best % cols, j_hi = j_lo;
  double eta_sum = 0.0, area_sum = 0.0;
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    const std::size_t i = k / cols;
    const std::size_t j = k % cols;
    ++r.cells;
    eta_sum += grid.etas[i];
    area_sum += grid.area_scales[j];
    i_lo = std::min(i_lo, i);
    i_hi = std::max(i_hi, i);
    j_lo = std::min(j_lo, j);
    j_hi = std::max(j_hi, j);
    auto visit = [&](std::size_t ni, std::size_t nj) {
      const std::size_t nk = ni * cols + nj;
      if (!seen[nk] && grid.fidelity[nk] >= threshold) {
        seen[nk] = 1;
        queue.push_back(nk);
      }
    };
    if (i > 0) visit(i - 1, j);
    if (i + 1 < grid.rows()) visit(i + 1, j);
    if (j > 0) visit(i, j - 1);
    if (j + 1 < cols) visit(i, j + 1);
  }
  r.empty = false;
  r.eta_lo = grid.etas[i_lo];
  r.eta_hi = grid.etas[i_hi];
  r.area_lo = grid.area_scales[j_lo];
  r.area_hi = grid.area_scales[j_hi];
  r.eta_centroid = eta_sum / static_cast<double>(r.cells);
  r.area_centroid = area_sum / static_cast<double>(r.cells);
  return r;
}

Window region_window(const RegionSummary& region) {
  if (region.empty) throw ContractViolation("empty region has no bounding box");
  return {region.eta_lo, region.eta_hi, region.area_lo, region.area_hi};
}

double window_infidelity(const ChainSpec& template_spec, const CompositeSequence& nb,
                         const Window& window, std::size_t points, const ScanOptions& options) {
  if (points < 1) throw ConfigurationError("window sub-grid needs at least one point per axis");
  if (window.eta_lo > window.eta_hi || window.area_lo > window.area_hi || !(window.eta_lo > 0.0)) {
    throw ConfigurationError("window must be an ordered rectangle with eta > 0");
  }
  auto axis = [points](double lo, double hi) {
    if (points == 1 || lo == hi) return std::vector<double>(points, 0.5 * (lo + hi));
    return Axis{lo, hi, points}.values();
  };
  std::vector<Point> pts;
  for (double e : axis(window.eta_lo, window.eta_hi)) {
    for (double a : axis(window.area_lo, window.area_hi)) pts.push_back({e, a});
  }
  const std::vector<double> f = evaluate_points(template_spec, nb, pts, options.threads);
  double acc = 0.0;
  for (double v : f) acc += 1.0 - v;
  return acc / static_cast<double>(f.size());
}

OptimizationResult optimize_phases(const ChainSpec& template_spec, const CompositeSequence& seed,
                                   const Window& window, const OptimizerOptions& options) {
  const std::vector<double> start = seed.half_phases();
  const std::string label = seed.label().empty() ? "optimized" : seed.label() + "-opt";
  auto objective = [&](const std::vector<double>& half) {
    return window_infidelity(template_spec, CompositeSequence::from_half_phases(half, label),
                             window, options.window_points, options.scan);
  };
  const double seed_objective = objective(start);
  SimplexResult best;
  if (start.empty()) {
    best = {start, seed_objective, 1};
  } else {
    SimplexOptions so;
    so.max_evaluations = std::max(1, options.max_evaluations - 1);
    so.initial_step = options.initial_step;
    so.value_tolerance = 1e-14;
    best = nelder_mead(objective, start, so);
    best.evaluations += 1;
  }
  std::vector<double> half = best.best_point;
  double value = best.best_value;
  if (value > seed_objective) {
    half = start;
    value = seed_objective;
  }
  for (double& h : half) h = reduce_angle(h);
  return {CompositeSequence::from_half_phases(half, label), seed_objective, value,
          best.evaluations};
}

double addressing_selectivity(const CompositeSequence& sequence, double leak_fraction,
                              double area_scale) {
  return transition_probability(
      sequence_propagator(sequence, leak_fraction * area_scale * kPi));
}

}  // namespace cnot
