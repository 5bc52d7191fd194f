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
#include <cstdint>
#include <random>
#include <vector>

#include "cnot/gate_engine.hpp"

namespace cnot {

/// Normalized vector of independent standard complex Gaussians, i.e. a
/// Haar-random pure state.
std::vector<Complex> haar_random_state(std::size_t dim, std::mt19937_64& rng);

/// Haar-random unitary from the QR decomposition of a complex Ginibre
/// matrix with the phases of R's diagonal divided out.
GateMatrix haar_random_unitary(std::size_t dim, std::mt19937_64& rng);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Sample mean of |<psi| S^dagger C |psi>|^2 over Haar-random states.
MonteCarloEstimate monte_carlo_fidelity(const GateMatrix& simulated, const GateMatrix& ideal,
                                        std::size_t samples, std::uint64_t seed);

}  // namespace cnot
