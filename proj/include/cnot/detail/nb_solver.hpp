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

// Newton solver for the NB flat-bottom conditions, shared by the double and
// extended-precision front ends.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "cnot/error.hpp"
#include "cnot/trig_polynomial.hpp"

namespace cnot::detail {

template <class Real>
std::vector<Real> expand_half_phases(std::span<const Real> half) {
  std::vector<Real> phases;
  phases.reserve(2 * half.size() + 1);
  phases.push_back(Real(0));
  phases.insert(phases.end(), half.begin(), half.end());
  if (!half.empty()) {
    phases.insert(phases.end(), half.rbegin() + 1, half.rend());
    phases.push_back(Real(0));
  }
  return phases;
}

/// Real parts (`re`), imaginary parts (`im`) and optionally the Jacobian of
/// the real parts (row-major m x m) of the normalized conditions
/// d^k u11/dA^k / (N/2)^k at A = 2pi, k = 2, 4, ..., 2m.
template <class Real>
void nb_conditions(std::span<const Real> half, std::vector<Real>& re, std::vector<Real>& im,
                   std::vector<Real>* jacobian) {
  using Poly = MatrixTrigPolynomial<Real>;
  const std::size_t m = half.size();
  const std::vector<Real> phases = expand_half_phases(half);
  const std::size_t n = phases.size();
  const Real two_pi = boost::math::constants::two_pi<Real>();
  const Real half_n = Real(static_cast<int>(n)) / Real(2);

  std::vector<Poly> factors;
  factors.reserve(n);
  for (const Real& p : phases) factors.push_back(Poly::pulse(p));
  std::vector<Poly> prefix{Poly::identity()};
  prefix.reserve(n + 1);
  for (std::size_t p = 0; p < n; ++p) prefix.push_back(prefix.back() * factors[p]);

  re.assign(m, Real(0));
  im.assign(m, Real(0));
  std::vector<Real> scale(m);
  for (std::size_t c = 0; c < m; ++c) {
    const int order = static_cast<int>(2 * (c + 1));
    Real s(1);
    for (int k = 0; k < order; ++k) s *= half_n;
    scale[c] = s;
    const auto d = prefix.back().entry_derivative(0, 0, order, two_pi);
    re[c] = d.real() / s;
    im[c] = d.imag() / s;
  }
  if (jacobian == nullptr) return;

  std::vector<Poly> suffix(n + 1, Poly::identity());
  for (std::size_t p = n; p-- > 0;) suffix[p] = factors[p] * suffix[p + 1];
  jacobian->assign(m * m, Real(0));
  // Position p (1 <= p <= N-2) carries half phase index min(p, N-1-p) - 1.
  for (std::size_t p = 1; p + 1 < n; ++p) {
    const std::size_t var = std::min(p, n - 1 - p) - 1;
    const Poly dp = prefix[p] * Poly::pulse_phase_derivative(phases[p]) * suffix[p + 1];
    for (std::size_t c = 0; c < m; ++c) {
      const int order = static_cast<int>(2 * (c + 1));
      (*jacobian)[c * m + var] += dp.entry_derivative(0, 0, order, two_pi).real() / scale[c];
    }
  }
}

/// Solves a * x = b in place (b becomes x) by Gaussian elimination with
/// partial pivoting. Returns false for a numerically singular matrix.
template <class Real>
bool solve_linear(std::vector<Real> a, std::vector<Real>& b) {
  using std::abs;
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(a[r * n + col]) > abs(a[pivot * n + col])) pivot = r;
    }
    if (abs(a[pivot * n + col]) == Real(0)) return false;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[pivot * n + k]);
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const Real f = a[r * n + col] / a[col * n + col];
      if (f == Real(0)) continue;
      for (std::size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    Real acc = b[r];
    for (std::size_t k = r + 1; k < n; ++k) acc -= a[r * n + k] * b[k];
    b[r] = acc / a[r * n + r];
  }
  using std::isfinite;
  return std::all_of(b.begin(), b.end(), [](const Real& x) { return isfinite(x); });
}

template <class Real>
Real euclidean_norm(const std::vector<Real>& v) {
  using std::sqrt;
  Real acc(0);
  for (const Real& x : v) acc += x * x;
  return sqrt(acc);
}

template <class Real>
struct NewtonOutcome {
  std::vector<Real> half;
  Real residual_norm;
  int iterations;
};

/// Damped Newton on the real parts of the conditions: each step is halved
/// until the residual norm drops below the largest of the last
/// kNonmonotoneWindow norms. The nonmonotone acceptance lets the iteration
/// leave the narrow valleys around the NB roots, several of which have a
/// singular Jacobian. The imaginary parts vanish
/// identically for anagram sequences and are checked on exit.
inline constexpr std::size_t kNonmonotoneWindow = 10;

template <class Real>
NewtonOutcome<Real> newton_nb(std::vector<Real> half, const Real& tolerance, int max_iterations,
                              const Real& max_step = Real(0.05)) {
  std::vector<Real> re, im, jac;
  nb_conditions<Real>(half, re, im, nullptr);
  Real norm = euclidean_norm(re);
  int it = 0;
  int nudges = 0;
  std::vector<Real> recent;
  for (; norm > tolerance; ++it) {
    if (it >= max_iterations) {
      throw SolverError("NB phase solver hit its iteration cap", static_cast<double>(norm));
    }
    nb_conditions<Real>(half, re, im, &jac);
    std::vector<Real> step(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) step[i] = -re[i];
    if (!solve_linear(jac, step)) {
      // Symmetric points such as all-zero phases have a vanishing Jacobian;
      // nudge off them along a fixed direction and try again.
      if (++nudges > 8) {
        throw SolverError("NB phase solver met a singular Jacobian", static_cast<double>(norm));
      }
      for (std::size_t i = 0; i < half.size(); ++i) {
        half[i] += Real(0.1) * Real(static_cast<double>((i * 7 + static_cast<std::size_t>(nudges) * 3) % 11 + 1) / 11.0);
      }
      nb_conditions<Real>(half, re, im, nullptr);
      norm = euclidean_norm(re);
      continue;
    }
    if (recent.size() == kNonmonotoneWindow) recent.erase(recent.begin());
    recent.push_back(norm);
    const Real reference = *std::max_element(recent.begin(), recent.end());
    Real longest(0);
    using std::abs;
    for (const Real& s : step) longest = std::max<Real>(longest, abs(s));
    Real t = longest > max_step ? Real(max_step / longest) : Real(1);
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving, t /= 2) {
      std::vector<Real> trial = half;
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += t * step[i];
      std::vector<Real> tre, tim;
      nb_conditions<Real>(trial, tre, tim, nullptr);
      const Real trial_norm = euclidean_norm(tre);
      if (trial_norm < reference) {
        half = std::move(trial);
        norm = trial_norm;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw SolverError("NB phase solver stalled: no damped step reduces the residual",
                        static_cast<double>(norm));
    }
  }
  nb_conditions<Real>(half, re, im, nullptr);
  const Real im_norm = euclidean_norm(im);
  if (im_norm > tolerance) {
    throw SolverError("imaginary part of the NB conditions does not vanish",
                      static_cast<double>(im_norm));
  }
  return {std::move(half), norm, it};
}

}  // namespace cnot::detail
