/*
   Copyright 2026 The cyclestab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace cyclestab {

using Complex = std::complex<double>;

/// Dense univariate polynomial over C, coefficients stored in ascending
/// powers: c[k] multiplies z^k.
///
/// Structural trailing zeros are allowed and meaningful. The n-inverse keeps
/// the nominal degree, so the 4-inverse of z is stored as [0,0,0,1,0]; the
/// true degree is recomputed wherever it matters (root finding, Schur test).
struct Poly {
  std::vector<Complex> c{Complex{0.0}};

  Poly() = default;
  explicit Poly(std::vector<Complex> coeffs);
  Poly(std::initializer_list<Complex> coeffs);

  /// Structural degree: index of the last stored coefficient.
  int degree() const { return static_cast<int>(c.size()) - 1; }

  /// Index of the last exactly nonzero coefficient, -1 for the zero polynomial.
  int true_degree() const;

  /// Coefficient of z^k, zero beyond storage.
  Complex at(std::size_t k) const { return k < c.size() ? c[k] : Complex{0.0}; }

  bool is_zero() const { return true_degree() < 0; }
};

/// Horner evaluation.
Complex eval(const Poly& p, Complex z);

/// Horner evaluation of p and p' in one pass.
std::pair<Complex, Complex> eval_with_derivative(const Poly& p, Complex z);

Poly derivative(const Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly subtract(const Poly& a, const Poly& b);
Poly multiply(const Poly& a, const Poly& b);
Poly scale(const Poly& p, Complex s);
Poly pow(const Poly& p, int t);

/// z^k with coefficient `lead`.
Poly monomial(int k, Complex lead = Complex{1.0});

/// Coefficient reversal at nominal degree n: for h of true degree at most n
/// returns h_n + h_{n-1} z + ... + h_0 z^n. Involution: applying it twice with
/// the same n gives the input back. Throws when deg h > n.
Poly n_inverse(const Poly& h, int n);

/// z * r(z^T): output degree T*deg(r) + 1, spectrum in T*Z + 1. Throws for T < 1.
Poly t_root_transform(const Poly& r, int T);

/// Drop exact trailing zeros, keeping at least one coefficient.
Poly trimmed(const Poly& p);

/// Coefficientwise comparison after padding the shorter side with zeros.
bool coeff_close(const Poly& a, const Poly& b, double tol);

/// Sum of |c_k|; scale factor used by residual thresholds.
double coeff_norm1(const Poly& p);

}  // namespace cyclestab
