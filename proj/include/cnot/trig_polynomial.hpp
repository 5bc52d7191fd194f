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

// Exact expansion of a composite-pulse propagator as a matrix-valued
// trigonometric polynomial in x = A/2:
//
//   U(A) = sum_{j=-N..N} C_j e^{i j A/2}
//
// Area derivatives follow term by term, d^k/dA^k e^{i j A/2} = (i j/2)^k e^{i j A/2},
// so no numerical differentiation is involved. Templated on the real type so
// the same code runs in double and in extended precision.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cnot::detail {

template <class Real>
struct ComplexOf {
  using type = std::complex<Real>;
};

template <class Real>
using ComplexT = typename ComplexOf<Real>::type;

template <class Real>
ComplexT<Real> unit_phasor(const Real& angle) {
  using std::cos;
  using std::sin;
  return ComplexT<Real>(cos(angle), sin(angle));
}

template <class Real>
class MatrixTrigPolynomial {
 public:
  using Complex = ComplexT<Real>;
  /// Row-major 2x2 coefficient block.
  using Block = std::array<Complex, 4>;

  static MatrixTrigPolynomial identity() {
    MatrixTrigPolynomial p(0);
    p.coeffs_[0] = {Complex(1), Complex(0), Complex(0), Complex(1)};
    return p;
  }

  /// cos(x) I + sin(x) M_phi with M_phi = [[0, i e^{-i phi}], [i e^{i phi}, 0]].
  static MatrixTrigPolynomial pulse(const Real& phase) {
    const Complex e_plus = unit_phasor(phase);
    const Complex e_minus = unit_phasor(Real(-phase));
    // i e^{-+i phi} sin(x) = e^{-+i phi} (z - 1/z) / 2.
    return from_sine_part(Complex(1), e_minus, e_plus);
  }

  /// Derivative of pulse(phase) with respect to the phase:
  /// sin(x) [[0, e^{-i phi}], [-e^{i phi}, 0]].
  static MatrixTrigPolynomial pulse_phase_derivative(const Real& phase) {
    const Complex i(Real(0), Real(1));
    const Complex e_plus = unit_phasor(phase);
    const Complex e_minus = unit_phasor(Real(-phase));
    // e^{-i phi} sin(x) = -i e^{-i phi} (z - 1/z) / 2.
    return from_sine_part(Complex(0), -i * e_minus, i * e_plus);
  }

  int degree() const noexcept { return degree_; }

  const Block& coefficient(int j) const {
    return coeffs_[static_cast<std::size_t>(j + degree_)];
  }

  MatrixTrigPolynomial operator*(const MatrixTrigPolynomial& rhs) const {
    MatrixTrigPolynomial out(degree_ + rhs.degree_);
    for (int a = -degree_; a <= degree_; ++a) {
      const Block& l = coefficient(a);
      for (int b = -rhs.degree_; b <= rhs.degree_; ++b) {
        const Block& r = rhs.coefficient(b);
        Block& o = out.coeffs_[static_cast<std::size_t>(a + b + out.degree_)];
        o[0] += l[0] * r[0] + l[1] * r[2];
        o[1] += l[0] * r[1] + l[1] * r[3];
        o[2] += l[2] * r[0] + l[3] * r[2];
        o[3] += l[2] * r[1] + l[3] * r[3];
      }
    }
    return out;
  }

  /// k-th derivative with respect to A of entry (row, col), evaluated at `area`.
  Complex entry_derivative(int row, int col, int order, const Real& area) const {
    const std::size_t idx = static_cast<std::size_t>(2 * row + col);
    const Complex i(Real(0), Real(1));
    Complex i_pow(1);
    for (int k = 0; k < order; ++k) i_pow *= i;
    Complex sum(0);
    for (int j = -degree_; j <= degree_; ++j) {
      const Complex& c = coeffs_[static_cast<std::size_t>(j + degree_)][idx];
      if (c == Complex(0)) continue;
      Real factor(1);
      const Real half_j = Real(j) / Real(2);
      for (int k = 0; k < order; ++k) factor *= half_j;
      sum += c * unit_phasor(Real(half_j * area)) * factor;
    }
    return sum * i_pow;
  }

 private:
  explicit MatrixTrigPolynomial(int degree)
      : degree_(degree),
        coeffs_(static_cast<std::size_t>(2 * degree + 1),
                Block{Complex(0), Complex(0), Complex(0), Complex(0)}) {}

  // diag * cos(x) on the diagonal, off-diagonal entries upper/lower times
  // (z - 1/z)/2, with z = e^{ix}.
  static MatrixTrigPolynomial from_sine_part(const Complex& diag, const Complex& upper,
                                             const Complex& lower) {
    MatrixTrigPolynomial p(1);
    const Complex half(Real(1) / Real(2));
    const Complex d = diag * half;
    const Complex u = upper * half;
    const Complex l = lower * half;
    p.coeffs_[2] = {d, u, l, d};
    p.coeffs_[0] = {d, -u, -l, d};
    return p;
  }

  int degree_;
  std::vector<Block> coeffs_;
};

/// Propagator polynomial of the product U_{phi_1} ... U_{phi_N}.
template <class Real>
MatrixTrigPolynomial<Real> sequence_polynomial(std::span<const Real> phases) {
  auto p = MatrixTrigPolynomial<Real>::identity();
  for (const Real& phase : phases) p = p * MatrixTrigPolynomial<Real>::pulse(phase);
  return p;
}

}  // namespace cnot::detail
