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

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cnot {

/// Lamb-Dicke parameter; finite and strictly positive.
class LambDicke {
 public:
  explicit LambDicke(double eta);
  double eta() const noexcept { return eta_; }

 private:
  double eta_;
};

/// Generalized Laguerre polynomial L_n^a(x) by the three-term recurrence.
double laguerre(int n, int a, double x);

/// Relative coupling Omega_{v,v+s} / Omega_0 of the s-th blue sideband:
/// eta^s e^{-eta^2/2} L_v^s(eta^2) sqrt(v!/(v+s)!). s must be 1 or 2.
double sideband_coupling(LambDicke ld, int v, int s);

/// Pulse-area ratios A_{v,v+s} / A_{v_ref,v_ref+s} over a grid of eta values.
/// Samples where the reference coupling vanishes are left empty.
struct CouplingRatioCurve {
  int sideband = 1;
  int reference_v = 0;
  std::vector<int> transitions;
  std::vector<double> etas;
  /// ratios[t][i] for transitions[t] at etas[i].
  std::vector<std::vector<std::optional<double>>> ratios;

  std::vector<std::string> labels() const;
};

CouplingRatioCurve area_ratio_curve(std::span<const double> etas, int s,
                                    std::span<const int> transitions, int reference_v);

}  // namespace cnot
