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

#include "cnot/haar.hpp"

#include <algorithm>
#include <cmath>

#include "cnot/error.hpp"

namespace cnot {

std::vector<Complex> haar_random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> psi(dim);
  double nrm = 0.0;
  for (Complex& a : psi) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = {re, im};
    nrm += re * re + im * im;
  }
  nrm = std::sqrt(nrm);
  for (Complex& a : psi) a /= nrm;
  return psi;
}

GateMatrix haar_random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Columns of a Ginibre matrix, orthonormalized by modified Gram-Schmidt.
  // Gram-Schmidt gives R with a positive real diagonal, which is exactly the
  // phase fix that makes Q Haar distributed.
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  for (auto& col : cols) {
    for (Complex& a : col) a = {gauss(rng), gauss(rng)};
  }
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex proj{0.0};
      for (std::size_t r = 0; r < dim; ++r) proj += std::conj(cols[j][r]) * cols[k][r];
      for (std::size_t r = 0; r < dim; ++r) cols[k][r] -= proj * cols[j][r];
    }
    double nrm = 0.0;
    for (const Complex& a : cols[k]) nrm += std::norm(a);
    nrm = std::sqrt(nrm);
    for (Complex& a : cols[k]) a /= nrm;
  }
  GateMatrix u(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = cols[c][r];
  }
  return u;
}

MonteCarloEstimate monte_carlo_fidelity(const GateMatrix& simulated, const GateMatrix& ideal,
                                        std::size_t samples, std::uint64_t seed) {
  if (simulated.dim() != ideal.dim()) {
    throw DimensionMismatch("Monte-Carlo fidelity needs matrices of equal dimension");
  }
  if (samples < 2) throw ConfigurationError("Monte-Carlo fidelity needs at least two samples");
  const std::size_t dim = simulated.dim();
  std::mt19937_64 rng(seed);
  std::vector<Complex> s_psi(dim), c_psi(dim);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const std::vector<Complex> psi = haar_random_state(dim, rng);
    // <psi| S^dagger C |psi> = <S psi | C psi>
    Complex amp{0.0};
    for (std::size_t r = 0; r < dim; ++r) {
      Complex sp{0.0}, cp{0.0};
      for (std::size_t c = 0; c < dim; ++c) {
        sp += simulated(r, c) * psi[c];
        cp += ideal(r, c) * psi[c];
      }
      amp += std::conj(sp) * cp;
    }
    const double f = std::norm(amp);
    sum += f;
    sum_sq += f * f;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

}  // namespace cnot
