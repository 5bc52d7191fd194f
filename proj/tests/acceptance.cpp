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


// One [PASS]/[FAIL] line per acceptance criterion. Exit status is the number
// of failing criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cnot/composite_design.hpp"
#include "cnot/gate_engine.hpp"
#include "cnot/haar.hpp"
#include "cnot/ion_coupling.hpp"
#include "cnot/landscape.hpp"
#include "cnot/precise.hpp"
#include "cnot/su2_pulse.hpp"

using namespace cnot;

namespace {

int failures = 0;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int id, bool ok, const std::string& detail, const Timer& t) {
  if (!ok) ++failures;
  std::printf("[%s] %d: %s (%.1f s)\n", ok ? "PASS" : "FAIL", id, detail.c_str(), t.seconds());
  std::fflush(stdout);
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double circular_distance(double a, double b) {
  const double d = reduce_angle(a - b);
  return std::min(d, kTwoPi - d);
}

const Axis kEta{0.005, 0.5, 100};
const Axis kArea{0.7, 1.3, 100};

void catalog_regression() {
  const Timer t;
  bool ok = true;
  double worst_residual = 0.0, worst_move = 0.0;
  std::string bad;
  for (const CatalogEntry& e : catalog_entries()) {
    const std::vector<double> half = catalog(e.name).half_phases();
    bool same = half.size() == e.half_phases_pi.size();
    for (std::size_t k = 0; same && k < half.size(); ++k) {
      same = std::lround(half[k] / kPi * 1000.0) == std::lround(e.half_phases_pi[k] * 1000.0);
    }
    if (!same) {
      ok = false;
      bad += " " + e.name + "(round-trip)";
    }
    if (e.family != SequenceFamily::nb_standard) continue;
    try {
      // A 1e-10 stop leaves the phases anywhere along the flat valley of
      // a near-double root; refining to the double-precision floor pins them.
      NbSolverOptions polish;
      polish.tolerance = 1e-15;
      const NbSolution sol = solve_nb(static_cast<int>(half.size()), half, polish);
      const std::vector<double> refined = sol.sequence.half_phases();
      double moved = 0.0;
      for (std::size_t k = 0; k < half.size(); ++k) {
        moved = std::max(moved, circular_distance(refined[k], half[k]));
      }
      worst_residual = std::max(worst_residual, sol.residual_norm);
      worst_move = std::max(worst_move, moved);
      if (sol.residual_norm > 1e-10 || moved > 5e-3 * kPi) {
        ok = false;
        bad += " " + e.name + "(moved " + fmt("%.3g", moved / kPi) + " pi)";
      }
    } catch (const SolverError& err) {
      ok = false;
      bad += " " + e.name + "(" + err.what() + ", residual " + fmt("%.2e", err.residual_norm()) + ")";
    }
  }
  ok = ok && t.seconds() < 5.0;
  report(1, ok,
         "catalog round-trip and Newton refinement; worst converged residual " +
             fmt("%.2e", worst_residual) + ", worst movement " + fmt("%.2e", worst_move / kPi) +
             " pi" + (bad.empty() ? "" : "; failing:" + bad),
         t);
}

void broadband_profile() {
  const Timer t;
  const double single = flat_top_width(CompositeSequence({0.0}), 1e-4);
  const double bb = flat_top_width(catalog("B3"), 1e-4);
  report(2, bb >= 10.0 * single && t.seconds() < 1.0,
         "B3 flat-top width " + fmt("%.4f", bb) + " rad vs single pulse " + fmt("%.4f", single) +
             " rad (ratio " + fmt("%.1f", bb / single) + ")",
         t);
}

void flat_bottom_order() {
  const Timer t;
  const HighPrecision two_pi = boost::multiprecision::atan(HighPrecision(1)) * 8;
  bool ok = true;
  std::string detail = "log-log slopes on [1e-3, 1e-2] rad:";
  for (const char* name : {"N5", "N9", "N13"}) {
    const std::vector<double> seed = catalog(name).half_phases();
    const int m = static_cast<int>(seed.size());
    const PreciseNbSolution sol = solve_nb_half_phases_precise(seed);
    const HighPrecision p1 = precise_transition_probability(sol.half_phases, two_pi + HighPrecision("1e-3"));
    const HighPrecision p2 = precise_transition_probability(sol.half_phases, two_pi + HighPrecision("1e-2"));
    const double slope = static_cast<double>(log(p2 / p1) / log(HighPrecision(10)));
    const double expected = 2.0 * m + 2.0;
    ok = ok && std::abs(slope - expected) <= 0.05 * expected;
    detail += " m=" + std::to_string(m) + " " + fmt("%.3f", slope) + " (want " +
              fmt("%.0f", expected) + ")";
  }
  report(3, ok, detail, t);
}

void coupling_limits() {
  const Timer t;
  const std::vector<double> etas{1e-7};
  const std::vector<int> second{4, 6};
  const CouplingRatioCurve c2 = area_ratio_curve(etas, 2, second, ChainSpec(2, 5, 0.1).conditional_reference_v());
  double worst = std::max(std::abs(c2.ratios[0][0].value() - std::sqrt(30.0 / 12.0)),
                          std::abs(c2.ratios[1][0].value() - std::sqrt(56.0 / 12.0)));
  const std::vector<int> first{0, 1, 2, 3, 5, 6, 7};
  const CouplingRatioCurve c1 = area_ratio_curve(etas, 1, first, 4);
  for (std::size_t k = 0; k < first.size(); ++k) {
    worst = std::max(worst, std::abs(c1.ratios[k][0].value() - std::sqrt((first[k] + 1.0) / 5.0)));
  }
  report(4, worst <= 1e-6 && t.seconds() < 1.0,
         "eta->0 ratio error " + fmt("%.2e", worst), t);
}

struct Sweep {
  FidelityGrid grid;
  RegionSummary region;
};

std::array<Sweep, 2> toffoli_sweeps(const CompositeSequence& nb) {
  std::array<Sweep, 2> out;
  for (int k = 0; k < 2; ++k) {
    out[k].grid = scan_fidelity(ChainSpec(2, 4 + k, 0.1), nb, kEta, kArea);
    out[k].region = best_region(out[k].grid, 0.99);
  }
  return out;
}

double sweep_best(const std::array<Sweep, 2>& s) {
  return std::max(s[0].region.best_fidelity, s[1].region.best_fidelity);
}

std::string describe(const std::array<Sweep, 2>& s) {
  std::string d;
  for (const Sweep& w : s) {
    d += " v0=" + std::to_string(w.grid.v0) + ": " + fmt("%.6f", w.region.best_fidelity) + " at eta=" +
         fmt("%.3f", w.region.best_eta) + " area_scale=" + fmt("%.3f", w.region.best_area_scale) + ";";
  }
  return d;
}

// Cells of the sweeps with F* >= threshold, with the analytic-phase gap.
struct AnalyticGap {
  std::size_t cells = 0;
  double worst = 0.0;
};

AnalyticGap analytic_gap(const std::array<Sweep, 2>& s, const CompositeSequence& nb, double threshold) {
  AnalyticGap gap;
  for (const Sweep& w : s) {
    for (std::size_t i = 0; i < w.grid.rows(); ++i) {
      for (std::size_t j = 0; j < w.grid.cols(); ++j) {
        if (w.grid.at(i, j) < threshold) continue;
        const FidelityResult f = gate_fidelity(ChainSpec(2, w.grid.v0, w.grid.etas[i]), nb, w.grid.area_scales[j]);
        ++gap.cells;
        gap.worst = std::max(gap.worst, std::abs(f.analytic - f.best));
      }
    }
  }
  return gap;
}

void cn_not_family() {
  const Timer t;
  bool ok = true;
  std::string detail = "N13o, 60x60:";
  const Axis eta{0.005, 0.5, 60};
  const Axis area{0.7, 1.3, 60};
  for (int n = 3; n <= 6; ++n) {
    const int v0 = n + 2;
    const FidelityGrid g = scan_fidelity(ChainSpec(n, v0, 0.1), catalog("N13o"), eta, area);
    const double best = *std::max_element(g.fidelity.begin(), g.fidelity.end());
    ok = ok && best >= 0.99;
    detail += " n=" + std::to_string(n) + " (v0=" + std::to_string(v0) + ") " + fmt("%.5f", best) + ";";
  }
  report(7, ok && t.seconds() < 600.0, detail, t);
}

void ten_controls() {
  const Timer t;
  // Point located by a coarse eta/v0 search; re-checked with a wider Fock cutoff.
  const ChainSpec spec(10, 14, 0.30);
  const double scale = 0.995;
  const FidelityResult f = gate_fidelity(spec, catalog("N13o"), scale);
  const FidelityResult wide = gate_fidelity(spec.with_cutoff(spec.phonon_cutoff() + 8), catalog("N13o"), scale);
  const bool ok = f.best >= 0.99 && wide.best >= 0.99 && std::abs(f.best - wide.best) <= 1e-6;
  report(8, ok && t.seconds() < 300.0,
         "C^10-NOT, N13o, v0=14, eta=0.30, area_scale=0.995: F* = " + fmt("%.6f", f.best) +
             " (cutoff " + std::to_string(spec.phonon_cutoff()) + "), " + fmt("%.6f", wide.best) +
             " (cutoff " + std::to_string(spec.phonon_cutoff() + 8) + ")",
         t);
}

void haar_oracle() {
  const Timer t;
  std::mt19937_64 rng(20261014);
  int agree = 0;
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const GateMatrix s = haar_random_unitary(8, rng);
    const GateMatrix c = haar_random_unitary(8, rng);
    const double closed = average_fidelity(s, c);
    const MonteCarloEstimate mc = monte_carlo_fidelity(s, c, 10000, 1000 + static_cast<std::uint64_t>(k));
    const double z = std::abs(mc.mean - closed) / mc.standard_error;
    worst = std::max(worst, z);
    if (z <= 3.0) ++agree;
  }
  report(10, agree == 20, std::to_string(agree) + "/20 pairs within 3 standard errors, worst " +
                              fmt("%.2f", worst) + " sigma", t);
}

void step_two_mapping() {
  const Timer t;
  double worst = 1.0;
  for (double eta : {0.1, 0.2, 0.3}) {
    const ChainSpec spec(2, 5, eta);
    for (std::size_t c = 0; c < 8; ++c) {
      JointState s = JointState::basis(3, spec.phonon_cutoff(), c, 5);
      dressing_step(s, spec, default_dressing());
      const std::size_t dressed = 7 - c;
      const int ones = std::popcount(dressed);
      worst = std::min(worst, std::norm(s.at(dressed, 5 + ones - (3 - ones))));
    }
  }
  report(11, worst >= 0.99, "3 ions, v0=5, eta in {0.1, 0.2, 0.3}: minimum sector population " +
                                fmt("%.6f", worst), t);
}

}  // namespace

int main() {
  catalog_regression();
  broadband_profile();
  flat_bottom_order();
  coupling_limits();

  Timer t5;
  const CompositeSequence n5 = catalog("N5");
  const std::array<Sweep, 2> n5_sweeps = toffoli_sweeps(n5);
  report(5, sweep_best(n5_sweeps) >= 0.999 && t5.seconds() < 60.0,
         "Toffoli N5 max F*:" + describe(n5_sweeps), t5);

  Timer t6;
  const CompositeSequence n9o = catalog("N9o");
  const std::array<Sweep, 2> n9o_sweeps = toffoli_sweeps(n9o);
  report(6, sweep_best(n9o_sweeps) >= 0.9999, "Toffoli N9o max F*:" + describe(n9o_sweeps), t6);

  cn_not_family();
  ten_controls();

  Timer t9;
  const RegionSummary& r4 = n5_sweeps[0].region;
  const RegionSummary& r5 = n5_sweeps[1].region;
  auto centroids = [](const RegionSummary& a, const RegionSummary& b) {
    return "v0=4 " + fmt("%.4f", a.eta_centroid) + " (" + std::to_string(a.cells) + " cells), v0=5 " +
           fmt("%.4f", b.eta_centroid) + " (" + std::to_string(b.cells) + " cells)";
  };
  const RegionSummary l4 = best_region(n5_sweeps[0].grid, 0.98);
  const RegionSummary l5 = best_region(n5_sweeps[1].grid, 0.98);
  report(9, !r4.empty && !r5.empty && r5.eta_centroid < r4.eta_centroid,
         "N5 F* >= 0.99 region eta centroid: " + centroids(r4, r5) + "; at F* >= 0.98: " + centroids(l4, l5),
         t9);

  haar_oracle();
  step_two_mapping();

  Timer t12;
  const AnalyticGap gap5 = analytic_gap(n5_sweeps, n5, 0.999);
  const AnalyticGap gap9 = analytic_gap(n9o_sweeps, n9o, 0.999);
  const AnalyticGap gap5_loose = analytic_gap(n5_sweeps, n5, 0.99);
  // With no N5 cell at 0.999 the check would pass vacuously; the N9o sweep
  // cells at the same threshold carry it instead.
  const bool ok12 = gap5.cells + gap9.cells > 0 && gap5.worst <= 1e-4 && gap9.worst <= 1e-4;
  report(12, ok12,
         "|F(analytic) - F*| over F* >= 0.999 cells: N5 " + std::to_string(gap5.cells) + " cells worst " +
             fmt("%.2e", gap5.worst) + ", N9o " + std::to_string(gap9.cells) + " cells worst " +
             fmt("%.2e", gap9.worst) + "; N5 F* >= 0.99 cells: " + std::to_string(gap5_loose.cells) +
             " worst " + fmt("%.2e", gap5_loose.worst),
         t12);

  Timer t13;
  const Sweep& home = n5_sweeps[0].region.best_fidelity >= n5_sweeps[1].region.best_fidelity ? n5_sweeps[0]
                                                                                               : n5_sweeps[1];
  const Window window = region_window(home.region);
  const OptimizationResult opt = optimize_phases(ChainSpec(2, home.grid.v0, 0.1), n5, window);
  const std::array<Sweep, 2> opt_sweeps = toffoli_sweeps(opt.sequence);
  std::string phases;
  for (double h : opt.sequence.half_phases()) phases += " " + fmt("%.4f", h / kPi);
  report(13, opt.objective < opt.seed_objective && sweep_best(opt_sweeps) >= 0.999,
         "N5 optimized on v0=" + std::to_string(home.grid.v0) + " region: mean infidelity " +
             fmt("%.4e", opt.seed_objective) + " -> " + fmt("%.4e", opt.objective) + " in " +
             std::to_string(opt.evaluations) + " evaluations, half-phases (pi)" + phases +
             "; re-sweep max F*:" + describe(opt_sweeps),
         t13);

  std::printf("%d criteria failed\n", failures);
  return failures;
}
