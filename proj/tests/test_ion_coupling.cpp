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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "cnot/error.hpp"
#include "cnot/ion_coupling.hpp"

using namespace cnot;

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Explicit sum L_n^a(x) = sum_k (-1)^k C(n+a, n-k) x^k / k!.
double laguerre_sum(int n, int a, double x) {
  double sum = 0.0;
  double xk_over_kfact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) xk_over_kfact *= x / k;
    sum += ((k % 2 == 0) ? 1.0 : -1.0) * binomial(n + a, n - k) * xk_over_kfact;
  }
  return sum;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST_CASE("laguerre examples") {
  for (double x : {0.0, 0.3, 0.9}) CHECK(laguerre(0, 2, x) == 1.0);
  CHECK(laguerre(1, 2, 0.04) == doctest::Approx(2.96).epsilon(1e-14));
  CHECK(laguerre(4, 2, 0.09) == doctest::Approx(13.26002).epsilon(1e-6));
  CHECK(laguerre(3, 1, 0.0) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("laguerre recurrence matches the explicit sum") {
  for (int a : {1, 2}) {
    for (int n = 0; n <= 20; ++n) {
      for (int j = 0; j <= 20; ++j) {
        const double x = j / 20.0;
        const double oracle = laguerre_sum(n, a, x);
        CHECK(std::abs(laguerre(n, a, x) - oracle) <= 1e-12 * std::max(1.0, std::abs(oracle)));
      }
    }
  }
}

TEST_CASE("lamb-dicke parameter validation") {
  CHECK(LambDicke(0.2).eta() == 0.2);
  CHECK_THROWS_AS(static_cast<void>(LambDicke(0.0)), ConfigurationError);
  CHECK_THROWS_AS(static_cast<void>(LambDicke(-0.1)), ConfigurationError);
  CHECK_THROWS_AS(static_cast<void>(LambDicke(std::nan(""))), ConfigurationError);
  CHECK_THROWS_AS(static_cast<void>(LambDicke(std::numeric_limits<double>::infinity())), ConfigurationError);
}

TEST_CASE("sideband coupling examples") {
  CHECK(sideband_coupling(LambDicke(0.1), 0, 2) ==
        doctest::Approx(0.01 * std::exp(-0.005) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(sideband_coupling(LambDicke(0.1), 0, 2) == doctest::Approx(0.0070358).epsilon(1e-5));
  for (double eta : {0.05, 0.3, 0.8}) {
    CHECK(sideband_coupling(LambDicke(eta), 0, 1) ==
          doctest::Approx(eta * std::exp(-eta * eta / 2)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(sideband_coupling(LambDicke(0.1), 2, 3), ConfigurationError);
  CHECK_THROWS_AS(sideband_coupling(LambDicke(0.1), 2, 0), ConfigurationError);
  CHECK_THROWS_AS(sideband_coupling(LambDicke(0.1), -1, 2), ContractViolation);
}

TEST_CASE("second sideband reproduces the printed closed form") {
  for (int v = 0; v <= 12; ++v) {
    for (double eta : {0.05, 0.2, 0.45}) {
      const double x = eta * eta;
      const double eq1 = eta * eta * std::exp(-x / 2) * laguerre_sum(v, 2, x) / std::sqrt((v + 1.0) * (v + 2.0));
      CHECK(sideband_coupling(LambDicke(eta), v, 2) == doctest::Approx(eq1).epsilon(1e-12));
      const double general = std::pow(eta, 2) * std::exp(-x / 2) * laguerre_sum(v, 2, x) *
                             std::sqrt(factorial(v) / factorial(v + 2));
      CHECK(sideband_coupling(LambDicke(eta), v, 2) == doctest::Approx(general).epsilon(1e-12));
    }
  }
}

TEST_CASE("small-eta limits of the couplings") {
  const double eta = 1e-5;
  for (int v = 0; v <= 8; ++v) {
    CHECK(sideband_coupling(LambDicke(eta), v, 2) / (eta * eta) ==
          doctest::Approx(std::sqrt((v + 1.0) * (v + 2.0)) / 2.0).epsilon(1e-8));
    CHECK(sideband_coupling(LambDicke(eta), v, 1) / eta ==
          doctest::Approx(std::sqrt(v + 1.0)).epsilon(1e-8));
  }
}

TEST_CASE("ratio curves approach their small-eta limits") {
  const std::vector<double> etas{1e-6, 1e-4};
  const std::vector<int> second{4, 6};
  const CouplingRatioCurve c2 = area_ratio_curve(etas, 2, second, 2);
  REQUIRE(c2.ratios.size() == 2);
  CHECK(c2.ratios[0][0].value() == doctest::Approx(std::sqrt(30.0 / 12.0)).epsilon(1e-9));
  CHECK(c2.ratios[1][0].value() == doctest::Approx(std::sqrt(56.0 / 12.0)).epsilon(1e-9));
  CHECK(c2.labels() == std::vector<std::string>{"A4-6/A2-4", "A6-8/A2-4"});

  const std::vector<int> first{0, 1, 2, 3, 5, 6, 7};
  const CouplingRatioCurve c1 = area_ratio_curve(etas, 1, first, 4);
  for (std::size_t t = 0; t < first.size(); ++t) {
    CHECK(c1.ratios[t][0].value() == doctest::Approx(std::sqrt((first[t] + 1.0) / 5.0)).epsilon(1e-9));
  }
  CHECK(c1.ratios[6][0].value() == doctest::Approx(1.26491).epsilon(1e-5));
  CHECK(c1.labels()[6] == "A7-8/A4-5");
}

TEST_CASE("ratio at a laguerre node is flagged, not infinite") {
  // L_1^2(x) = 3 - x vanishes at x = 3.
  const std::vector<double> etas{0.5, std::sqrt(3.0), 2.0};
  const std::vector<int> t{0};
  const CouplingRatioCurve c = area_ratio_curve(etas, 2, t, 1);
  CHECK(c.ratios[0][0].has_value());
  CHECK_FALSE(c.ratios[0][1].has_value());
  CHECK(c.ratios[0][2].has_value());
}

TEST_CASE("coupling sign changes only at laguerre nodes") {
  // Second sideband from v = 5: count sign flips on a fine grid and compare with nodes of L_5^2.
  int flips = 0, nodes = 0;
  double prev_c = sideband_coupling(LambDicke(0.001), 5, 2);
  double prev_l = laguerre_sum(5, 2, 1e-6);
  for (int k = 2; k <= 3000; ++k) {
    const double eta = 0.001 * k;
    const double c = sideband_coupling(LambDicke(eta), 5, 2);
    const double l = laguerre_sum(5, 2, eta * eta);
    if ((c > 0) != (prev_c > 0)) ++flips;
    if ((l > 0) != (prev_l > 0)) ++nodes;
    prev_c = c;
    prev_l = l;
  }
  CHECK(flips == nodes);
  CHECK(flips > 0);
}
