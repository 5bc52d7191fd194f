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

#include "cnot/ion_coupling.hpp"

#include <cmath>

#include "cnot/error.hpp"

namespace cnot {

LambDicke::LambDicke(double eta) : eta_(eta) {
  if (!(std::isfinite(eta) && eta > 0.0)) {
    throw ConfigurationError("Lamb-Dicke parameter must be finite and positive");
  }
}

double laguerre(int n, int a, double x) {
  if (n < 0 || a < 0) throw ContractViolation("Laguerre degree and order must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + a - x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0 + a - x) * cur - (k - 1.0 + a) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double sideband_coupling(LambDicke ld, int v, int s) {
  if (s != 1 && s != 2) throw ConfigurationError("only sidebands s = 1 and s = 2 are supported");
  if (v < 0) throw ContractViolation("phonon number must be non-negative");
  const double eta = ld.eta();
  const double x = eta * eta;
  // sqrt(v!/(v+s)!) = 1/sqrt((v+1)...(v+s))
  double rising = 1.0;
  for (int k = 1; k <= s; ++k) rising *= v + k;
  return std::pow(eta, s) * std::exp(-0.5 * x) * laguerre(v, s, x) / std::sqrt(rising);
}

std::vector<std::string> CouplingRatioCurve::labels() const {
  std::vector<std::string> out;
  out.reserve(transitions.size());
  const auto name = [this](int v) {
    return "A" + std::to_string(v) + "-" + std::to_string(v + sideband);
  };
  for (int v : transitions) out.push_back(name(v) + "/" + name(reference_v));
  return out;
}

CouplingRatioCurve area_ratio_curve(std::span<const double> etas, int s,
                                    std::span<const int> transitions, int reference_v) {
  CouplingRatioCurve curve;
  curve.sideband = s;
  curve.reference_v = reference_v;
  curve.transitions.assign(transitions.begin(), transitions.end());
  curve.etas.assign(etas.begin(), etas.end());
  curve.ratios.assign(transitions.size(),
                      std::vector<std::optional<double>>(etas.size(), std::nullopt));
  for (std::size_t i = 0; i < etas.size(); ++i) {
    const LambDicke ld(etas[i]);
    const double ref = sideband_coupling(ld, reference_v, s);
    // Relative to the Laguerre-free prefactor, so the test does not depend on eta^s.
    const double prefactor = std::pow(ld.eta(), s) * std::exp(-0.5 * ld.eta() * ld.eta());
    if (std::abs(ref) <= 1e-14 * prefactor) continue;
    for (std::size_t t = 0; t < transitions.size(); ++t) {
      curve.ratios[t][i] = sideband_coupling(ld, transitions[t], s) / ref;
    }
  }
  return curve;
}

}  // namespace cnot
