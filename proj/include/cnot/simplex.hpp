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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace cnot {

struct SimplexOptions {
  int max_evaluations = 2000;
  /// Stop once the spread of objective values across the simplex drops below this.
  double value_tolerance = 1e-12;
  /// Edge length of the initial simplex around the start point.
  double initial_step = 0.1;
};

struct SimplexResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead downhill simplex with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). The start
/// point is the first vertex, so the result is never worse than it.
inline SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                 std::vector<double> start, const SimplexOptions& options) {
  const std::size_t n = start.size();
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<std::vector<double>> vertex(n + 1, start);
  std::vector<double> value(n + 1);
  value[0] = eval(start);
  for (std::size_t k = 0; k < n; ++k) {
    vertex[k + 1][k] += options.initial_step;
    value[k + 1] = eval(vertex[k + 1]);
  }

  std::vector<std::size_t> order(n + 1);
  while (evals < options.max_evaluations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];
    if (value[worst] - value[best] <= options.value_tolerance) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += vertex[k][i] / static_cast<double>(n);
    }
    auto along = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = centroid[i] + t * (vertex[worst][i] - centroid[i]);
      return x;
    };

    std::vector<double> reflected = along(-1.0);
    const double fr = eval(reflected);
    if (evals >= options.max_evaluations) {
      if (fr < value[worst]) {
        vertex[worst] = std::move(reflected);
        value[worst] = fr;
      }
      break;
    }
    if (fr < value[best]) {
      std::vector<double> expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        vertex[worst] = std::move(expanded);
        value[worst] = fe;
      } else {
        vertex[worst] = std::move(reflected);
        value[worst] = fr;
      }
      continue;
    }
    if (fr < value[second]) {
      vertex[worst] = std::move(reflected);
      value[worst] = fr;
      continue;
    }
    const bool outside = fr < value[worst];
    std::vector<double> contracted = along(outside ? -0.5 : 0.5);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : value[worst])) {
      vertex[worst] = std::move(contracted);
      value[worst] = fc;
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == best || evals >= options.max_evaluations) continue;
      for (std::size_t i = 0; i < n; ++i) {
        vertex[k][i] = vertex[best][i] + 0.5 * (vertex[k][i] - vertex[best][i]);
      }
      value[k] = eval(vertex[k]);
    }
  }

  const auto it = std::min_element(value.begin(), value.end());
  const auto idx = static_cast<std::size_t>(it - value.begin());
  return {vertex[idx], *it, evals};
}

}  // namespace cnot
