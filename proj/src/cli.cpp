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

#include "cnot/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "cnot/composite_design.hpp"
#include "cnot/error.hpp"
#include "cnot/gate_engine.hpp"
#include "cnot/haar.hpp"
#include "cnot/io.hpp"
#include "cnot/ion_coupling.hpp"
#include "cnot/landscape.hpp"
#include "cnot/svg.hpp"

namespace cnot::cli {

double parse_scaled(const std::string& text) {
  std::string body = text;
  double factor = 1.0;
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
    factor = kPi;
    body.erase(body.size() - 2);
    if (body.empty() || body == "+") body = "1";
    if (body == "-") body = "-1";
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &used);
  } catch (const std::exception&) {
    throw ConfigurationError("cannot parse number '" + text + "'");
  }
  if (used != body.size() || !std::isfinite(v)) {
    throw ConfigurationError("cannot parse number '" + text + "'");
  }
  return v * factor;
}

namespace {

double parse_angle(const std::string& text) {
  const bool suffixed = text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0;
  const double v = parse_scaled(text);
  return suffixed ? v : v * kPi;
}

}  // namespace

Axis parse_range(const std::string& text, bool angle) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw ConfigurationError("range '" + text + "' must have the form min:max:count");
  }
  Axis axis;
  const auto value = angle ? parse_angle : parse_scaled;
  axis.min = value(text.substr(0, first));
  axis.max = value(text.substr(first + 1, second - first - 1));
  const std::string count = text.substr(second + 1);
  std::size_t used = 0;
  long long n = 0;
  try {
    n = std::stoll(count, &used);
  } catch (const std::exception&) {
    throw ConfigurationError("range '" + text + "': count must be an integer");
  }
  if (used != count.size() || n < 2) {
    throw ConfigurationError("range '" + text + "': count must be an integer >= 2");
  }
  axis.count = static_cast<std::size_t>(n);
  axis.validate("range '" + text + "'");
  return axis;
}

namespace {

// Parses lo:hi (no count) into a pair.
std::pair<double, double> parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || text.find(':', colon + 1) != std::string::npos) {
    throw ConfigurationError("interval '" + text + "' must have the form lo:hi");
  }
  const double lo = parse_scaled(text.substr(0, colon));
  const double hi = parse_scaled(text.substr(colon + 1));
  if (!(lo <= hi)) throw ConfigurationError("interval '" + text + "' is reversed");
  return {lo, hi};
}

struct SequenceChoice {
  std::string name;
  std::string phase_file;

  void add_to(CLI::App* app) {
    app->add_option("--sequence", name,
                    "Catalog sequence: N5 N9 N13 N17 N21 N25 N5o N9o N13o B3");
    app->add_option("--phases", phase_file,
                    "File with one phase per line in units of pi (instead of --sequence)");
  }

  CompositeSequence resolve() const {
    if (!name.empty() && !phase_file.empty()) {
      throw ConfigurationError("give either --sequence or --phases, not both");
    }
    if (!phase_file.empty()) {
      std::ifstream in(phase_file);
      if (!in) throw ConfigurationError("cannot open phase file '" + phase_file + "'");
      return read_phase_list(in, phase_file);
    }
    if (name.empty()) throw ConfigurationError("a sequence is required (--sequence or --phases)");
    return catalog(name);
  }
};

void write_to(const std::string& path, std::ostream& out,
              const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) return;
  if (path == "-") {
    writer(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigurationError("cannot open output file '" + path + "'");
  writer(file);
  if (!file) throw ConfigurationError("failed writing '" + path + "'");
}

std::string num(double v, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

struct ProfileArgs {
  SequenceChoice seq;
  std::string area = "0:4:2000";
  std::string out = "-";
  std::string svg;
};

int cmd_profile(const ProfileArgs& a, std::ostream& out) {
  const CompositeSequence seq = a.seq.resolve();
  const Axis area = parse_range(a.area, true);
  const TransitionProfile profile = excitation_profile(seq, area.min, area.max, area.count);
  write_to(a.out, out, [&](std::ostream& os) { write_profile_csv(os, profile); });
  write_to(a.svg, out, [&](std::ostream& os) {
    std::vector<double> x(profile.areas.size());
    std::transform(profile.areas.begin(), profile.areas.end(), x.begin(),
                   [](double v) { return v / kPi; });
    LineSeries s{seq.label(), {profile.probabilities.begin(), profile.probabilities.end()}};
    write_line_chart_svg(os, x, {s}, "Excitation profile " + seq.label(), "A / pi",
                         "transition probability");
  });
  return kExitOk;
}

struct CouplingArgs {
  int sideband = 2;
  int v0 = 5;
  int n = 2;
  std::string eta = "0.01:1:100";
  std::vector<int> transitions;
  int reference = -1;
  std::string out = "-";
  std::string svg;
};

int cmd_couplings(CouplingArgs a, std::ostream& out) {
  if (a.sideband != 1 && a.sideband != 2) throw ConfigurationError("--sideband must be 1 or 2");
  if (a.v0 < a.n + 1) throw ConfigurationError("--v0 must be at least n + 1");
  if (a.transitions.empty()) {
    if (a.sideband == 1) {
      for (int v = a.v0 - a.n - 1; v <= a.v0 + a.n; ++v) {
        if (v != a.v0 - 1) a.transitions.push_back(v);
      }
    } else {
      for (int v = a.v0 - a.n + 1; v <= a.v0 + a.n - 1; v += 2) a.transitions.push_back(v);
    }
  }
  if (a.reference < 0) a.reference = a.sideband == 1 ? a.v0 - 1 : a.v0 - a.n - 1;
  for (int v : a.transitions) {
    if (v < 0) throw ConfigurationError("--transitions entries must be non-negative");
  }
  const Axis eta = parse_range(a.eta);
  if (!(eta.min > 0.0)) throw ConfigurationError("--eta range must be strictly positive");
  const std::vector<double> etas = eta.values();
  const CouplingRatioCurve curve = area_ratio_curve(etas, a.sideband, a.transitions, a.reference);
  write_to(a.out, out, [&](std::ostream& os) { write_ratio_csv(os, curve); });
  write_to(a.svg, out, [&](std::ostream& os) {
    std::vector<LineSeries> series;
    const auto labels = curve.labels();
    for (std::size_t t = 0; t < labels.size(); ++t) series.push_back({labels[t], curve.ratios[t]});
    write_line_chart_svg(os, etas, series, "Pulse-area ratios", "eta", "area ratio");
  });
  return kExitOk;
}

struct SolveArgs {
  int m = 0;
  std::vector<double> seed;
  std::string from;
  std::string out = "-";
  int max_iterations = 200;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  std::vector<double> seed;
  if (!a.from.empty()) {
    if (!a.seed.empty()) throw ConfigurationError("give either --seed or --from, not both");
    seed = catalog(a.from).half_phases();
  } else {
    for (double s : a.seed) seed.push_back(s * kPi);
  }
  const int m = a.m > 0 ? a.m : static_cast<int>(seed.size());
  if (m < 1) throw ConfigurationError("--m (or a seed) is required");
  if (seed.size() != static_cast<std::size_t>(m)) {
    throw ConfigurationError("--seed must hold exactly m half-phases");
  }
  NbSolverOptions opts;
  opts.max_iterations = a.max_iterations;
  const NbSolution sol = solve_nb(m, seed, opts);
  write_to(a.out, out, [&](std::ostream& os) {
    os << "# N=" << sol.sequence.size() << " iterations=" << sol.iterations
       << " residual_norm=" << num(sol.residual_norm, "%.3e") << '\n';
    for (const ConditionResidual& r : nb_residuals(sol.sequence)) {
      os << "# order " << r.order << " normalized residual " << num(r.normalized, "%.3e") << '\n';
    }
    write_phase_list(os, sol.sequence);
  });
  return kExitOk;
}

double circular_distance(double a, double b) {
  const double d = reduce_angle(a - b);
  return std::min(d, kTwoPi - d);
}

int cmd_verify_catalog(std::ostream& out) {
  bool all = true;
  auto report = [&](bool ok, const std::string& what) {
    all = all && ok;
    out << (ok ? "[PASS] " : "[FAIL] ") << what << '\n';
  };
  for (const CatalogEntry& e : catalog_entries()) {
    const std::vector<double> half = catalog(e.name).half_phases();
    bool same = half.size() == e.half_phases_pi.size();
    for (std::size_t k = 0; same && k < half.size(); ++k) {
      same = std::lround(half[k] / kPi * 1000.0) == std::lround(e.half_phases_pi[k] * 1000.0);
    }
    report(same, e.name + " round-trips to its tabulated half-phases");
    if (e.family != SequenceFamily::nb_standard) continue;
    try {
      // A 1e-10 stop leaves the phases anywhere along the flat valley of
      // a near-double root; refining to the double-precision floor pins them.
      NbSolverOptions polish;
      polish.tolerance = 1e-15;
      const NbSolution sol = solve_nb(static_cast<int>(half.size()), half, polish);
      double moved = 0.0;
      const std::vector<double> refined = sol.sequence.half_phases();
      for (std::size_t k = 0; k < half.size(); ++k) {
        moved = std::max(moved, circular_distance(refined[k], half[k]));
      }
      report(sol.residual_norm <= 1e-10 && moved <= 5e-3 * kPi,
             e.name + " Newton refinement: residual " + num(sol.residual_norm, "%.2e") +
                 ", max phase movement " + num(moved / kPi, "%.2e") + " pi");
    } catch (const SolverError& err) {
      report(false, e.name + " Newton refinement failed: " + err.what());
    }
  }
  const double single = flat_top_width(CompositeSequence({0.0}), 1e-4);
  const double bb = flat_top_width(catalog("B3"), 1e-4);
  report(bb >= 10.0 * single, "B3 flat top (p >= 1-1e-4) width " + num(bb, "%.4f") +
                                  " rad vs single pulse " + num(single, "%.4f") + " rad");
  return all ? kExitOk : kExitNumerical;
}

struct ScanArgs {
  std::string gate = "cnnot";
  int n = 2;
  int v0 = 4;
  int cutoff = 0;
  SequenceChoice seq;
  std::string eta = "0.02:0.5:100";
  std::string area = "0.7:1.3:100";
  std::string out = "-";
  std::string svg;
  unsigned threads = 0;
  double threshold = 0.99;
  std::size_t mc_samples = 0;
  std::uint64_t seed = 1;
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  if (a.gate != "cnnot") throw ConfigurationError("--gate must be 'cnnot'");
  const CompositeSequence nb = a.seq.resolve();
  const Axis eta = parse_range(a.eta);
  const Axis area = parse_range(a.area);
  const ChainSpec spec(a.n, a.v0, eta.min > 0.0 ? eta.min : 0.1, a.cutoff);
  const FidelityGrid grid = scan_fidelity(spec, nb, eta, area, {a.threads});
  write_to(a.out, out, [&](std::ostream& os) { write_scan_csv(os, grid); });
  write_to(a.svg, out, [&](std::ostream& os) {
    write_heatmap_svg(os, grid,
                      "C^" + std::to_string(a.n) + "-NOT, " + nb.label() + ", v0=" +
                          std::to_string(a.v0));
  });
  const RegionSummary region = best_region(grid, a.threshold);
  const FidelityResult best = gate_fidelity(spec.with_eta(region.best_eta), nb,
                                            region.best_area_scale);
  std::ostream& log = a.out == "-" ? err : out;
  log << "max F* = " << num(region.best_fidelity) << " at eta=" << num(region.best_eta)
      << " area_scale=" << num(region.best_area_scale)
      << " (analytic-phase F = " << num(best.analytic) << ")\n";
  if (region.empty) {
    log << "no cell reaches F* >= " << a.threshold << '\n';
  } else {
    log << "region F* >= " << a.threshold << ": " << region.cells << " cells, eta in ["
        << num(region.eta_lo) << ", " << num(region.eta_hi) << "], area_scale in ["
        << num(region.area_lo) << ", " << num(region.area_hi) << "]\n";
  }
  if (a.mc_samples > 0) {
    const GateSimulation sim =
        simulate_gate(spec.with_eta(region.best_eta), nb, region.best_area_scale);
    const GateMatrix ideal = reference_gate(a.n, best.best_phases.alpha, best.best_phases.beta);
    const MonteCarloEstimate mc = monte_carlo_fidelity(sim.matrix, ideal, a.mc_samples, a.seed);
    log << "Monte-Carlo check (" << a.mc_samples << " Haar states, seed " << a.seed
        << "): " << num(mc.mean) << " +- " << num(mc.standard_error, "%.2e")
        << " vs closed form " << num(average_fidelity(sim.matrix, ideal)) << '\n';
  }
  return kExitOk;
}

struct OptimizeArgs {
  int n = 2;
  int v0 = 4;
  int cutoff = 0;
  SequenceChoice seq;
  std::string eta = "0.02:0.5:50";
  std::string area = "0.7:1.3:50";
  std::string window_eta;
  std::string window_area;
  double threshold = 0.99;
  int budget = 2000;
  std::size_t points = 8;
  unsigned threads = 0;
  std::string out = "-";
};

int cmd_optimize(const OptimizeArgs& a, std::ostream& out, std::ostream& err) {
  const CompositeSequence seed = a.seq.resolve();
  if (a.budget < 1) throw ConfigurationError("--budget must be positive");
  if (a.points < 1) throw ConfigurationError("--points must be positive");
  const ChainSpec spec(a.n, a.v0, 0.1, a.cutoff);
  std::ostream& log = a.out == "-" ? err : out;
  Window window;
  if (!a.window_eta.empty() || !a.window_area.empty()) {
    if (a.window_eta.empty() || a.window_area.empty()) {
      throw ConfigurationError("--window-eta and --window-area go together");
    }
    std::tie(window.eta_lo, window.eta_hi) = parse_interval(a.window_eta);
    std::tie(window.area_lo, window.area_hi) = parse_interval(a.window_area);
  } else {
    const FidelityGrid grid =
        scan_fidelity(spec, seed, parse_range(a.eta), parse_range(a.area), {a.threads});
    const RegionSummary region = best_region(grid, a.threshold);
    if (region.empty) {
      throw ConfigurationError("seed has no region with F* >= " + num(a.threshold) +
                               "; pass --window-eta/--window-area explicitly");
    }
    window = region_window(region);
  }
  log << "window eta [" << num(window.eta_lo) << ", " << num(window.eta_hi) << "], area_scale ["
      << num(window.area_lo) << ", " << num(window.area_hi) << "]\n";
  OptimizerOptions opts;
  opts.max_evaluations = a.budget;
  opts.window_points = a.points;
  opts.scan.threads = a.threads;
  const OptimizationResult res = optimize_phases(spec, seed, window, opts);
  log << "mean infidelity " << num(res.seed_objective, "%.6e") << " -> "
      << num(res.objective, "%.6e") << " after " << res.evaluations << " evaluations\n";
  write_to(a.out, out, [&](std::ostream& os) { write_phase_list(os, res.sequence); });
  return kExitOk;
}

struct SelectivityArgs {
  SequenceChoice seq;
  std::string leak = "0:1:101";
  double area_scale = 1.0;
  std::string out = "-";
};

int cmd_selectivity(const SelectivityArgs& a, std::ostream& out) {
  const CompositeSequence seq = a.seq.resolve();
  const Axis leak = parse_range(a.leak);
  const CompositeSequence single({0.0}, "single");
  write_to(a.out, out, [&](std::ostream& os) {
    os << "leak_fraction,probability,single_pulse\n";
    for (double r : leak.values()) {
      os << num(r) << ',' << num(addressing_selectivity(seq, r, a.area_scale)) << ','
         << num(addressing_selectivity(single, r, a.area_scale)) << '\n';
    }
  });
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composite-pulse design and C^n-NOT gate simulation. "
               "Areas and phases are given in units of pi."};
  app.name(args.empty() ? "cnot-pulse" : args.front());
  app.set_config("--config", "", "key=value configuration file; command-line flags win");
  app.require_subcommand(1);

  ProfileArgs profile;
  auto* sp = app.add_subcommand("profile", "Excitation profile p(A) of a composite sequence");
  profile.seq.add_to(sp);
  sp->add_option("--area", profile.area, "Per-pulse area range min:max:count (units of pi)")->capture_default_str();
  sp->add_option("--out", profile.out, "CSV output path, '-' for stdout")->capture_default_str();
  sp->add_option("--svg", profile.svg, "Optional SVG plot path");

  CouplingArgs couplings;
  auto* sc = app.add_subcommand("couplings", "Sideband pulse-area ratio curves versus eta");
  sc->add_option("--sideband", couplings.sideband, "Sideband order, 1 or 2")->capture_default_str();
  sc->add_option("--v0", couplings.v0, "Initial phonon number")->capture_default_str();
  sc->add_option("--n", couplings.n, "Number of control qubits (sets default transitions)")->capture_default_str();
  sc->add_option("--eta", couplings.eta, "Lamb-Dicke range min:max:count")->capture_default_str();
  sc->add_option("--transitions", couplings.transitions,
                 "Lower phonon numbers v of the plotted transitions, comma separated")
      ->delimiter(',');
  sc->add_option("--ref", couplings.reference, "Lower phonon number of the reference transition");
  sc->add_option("--out", couplings.out, "CSV output path, '-' for stdout")->capture_default_str();
  sc->add_option("--svg", couplings.svg, "Optional SVG plot path");

  SolveArgs solve;
  auto* ss = app.add_subcommand("solve", "Solve narrowband flat-bottom phases by Newton iteration");
  ss->add_option("--m", solve.m, "Number of free half-phases (N = 2m+1 pulses)");
  ss->add_option("--seed", solve.seed, "Seed half-phases in units of pi, comma separated")
      ->delimiter(',');
  ss->add_option("--from", solve.from, "Seed from a catalog sequence instead of --seed");
  ss->add_option("--max-iterations", solve.max_iterations, "Newton iteration cap")->capture_default_str();
  ss->add_option("--out", solve.out, "Phase-list output path, '-' for stdout")->capture_default_str();

  auto* sv = app.add_subcommand("verify-catalog", "Regression checks of the built-in sequences");

  ScanArgs scan;
  auto* sg = app.add_subcommand("scan", "Gate fidelity F* over an (eta, area-scale) grid");
  sg->add_option("--gate", scan.gate, "Gate family (cnnot)")->capture_default_str();
  sg->add_option("--n", scan.n, "Number of control qubits")->capture_default_str();
  sg->add_option("--v0", scan.v0, "Initial phonon number (>= n+1)")->capture_default_str();
  sg->add_option("--cutoff", scan.cutoff, "Initial phonon cutoff (0: v0+n+6)")->capture_default_str();
  scan.seq.add_to(sg);
  sg->add_option("--eta", scan.eta, "Lamb-Dicke range min:max:count")->capture_default_str();
  sg->add_option("--area", scan.area, "Area range A/A_min as min:max:count")->capture_default_str();
  sg->add_option("--out", scan.out, "CSV output path, '-' for stdout")->capture_default_str();
  sg->add_option("--svg", scan.svg, "Optional SVG heatmap path");
  sg->add_option("--threads", scan.threads, "Worker threads (0: CNOT_THREADS or all cores)")->capture_default_str();
  sg->add_option("--threshold", scan.threshold, "Fidelity threshold of the region summary")->capture_default_str();
  sg->add_option("--mc-samples", scan.mc_samples,
                 "Haar samples for a Monte-Carlo check of the best cell (0: skip)")->capture_default_str();
  sg->add_option("--seed", scan.seed, "Random seed of the Monte-Carlo check")->capture_default_str();

  OptimizeArgs optimize;
  auto* so = app.add_subcommand("optimize", "Optimize NB half-phases for a gate region");
  so->add_option("--n", optimize.n, "Number of control qubits")->capture_default_str();
  so->add_option("--v0", optimize.v0, "Initial phonon number (>= n+1)")->capture_default_str();
  so->add_option("--cutoff", optimize.cutoff, "Initial phonon cutoff (0: v0+n+6)")->capture_default_str();
  optimize.seq.add_to(so);
  so->add_option("--eta", optimize.eta, "Scan range used to locate the seed's region")->capture_default_str();
  so->add_option("--area", optimize.area, "Area range used to locate the seed's region")->capture_default_str();
  so->add_option("--window-eta", optimize.window_eta, "Explicit window eta_lo:eta_hi");
  so->add_option("--window-area", optimize.window_area, "Explicit window area_lo:area_hi");
  so->add_option("--threshold", optimize.threshold, "Region threshold for the default window")->capture_default_str();
  so->add_option("--budget", optimize.budget, "Objective evaluations")->capture_default_str();
  so->add_option("--points", optimize.points, "Sub-grid points per window axis")->capture_default_str();
  so->add_option("--threads", optimize.threads, "Worker threads (0: CNOT_THREADS or all cores)")->capture_default_str();
  so->add_option("--out", optimize.out, "Phase-list output path, '-' for stdout")->capture_default_str();

  SelectivityArgs selectivity;
  auto* sl = app.add_subcommand("selectivity",
                                "Neighbour-ion excitation versus the fraction of area it sees");
  selectivity.seq.add_to(sl);
  sl->add_option("--leak", selectivity.leak, "Leak-fraction range min:max:count")->capture_default_str();
  sl->add_option("--area-scale", selectivity.area_scale, "Per-pulse area in units of pi")->capture_default_str();
  sl->add_option("--out", selectivity.out, "CSV output path, '-' for stdout")->capture_default_str();

  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"cnot-pulse"} : args;
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (sp->parsed()) return cmd_profile(profile, out);
    if (sc->parsed()) return cmd_couplings(couplings, out);
    if (ss->parsed()) return cmd_solve(solve, out);
    if (sv->parsed()) return cmd_verify_catalog(out);
    if (sg->parsed()) return cmd_scan(scan, out, err);
    if (so->parsed()) return cmd_optimize(optimize, out, err);
    if (sl->parsed()) return cmd_selectivity(selectivity, out);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << " (residual " << num(e.residual_norm(), "%.3e") << ")\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::validation ? kExitValidation : kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitValidation;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cnot::cli
