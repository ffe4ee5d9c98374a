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

#include "cyclestab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cyclestab {

Poly::Poly(std::vector<Complex> coeffs) : c(std::move(coeffs)) {
  if (c.empty()) throw std::invalid_argument("Poly: coefficient list must be non-empty");
}

Poly::Poly(std::initializer_list<Complex> coeffs) : c(coeffs) {
  if (c.empty()) throw std::invalid_argument("Poly: coefficient list must be non-empty");
}

int Poly::true_degree() const {
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (c[static_cast<std::size_t>(k)] != Complex{0.0}) return k;
  }
  return -1;
}

Complex eval(const Poly& p, Complex z) {
  Complex acc{0.0};
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<Complex, Complex> eval_with_derivative(const Poly& p, Complex z) {
  Complex value{0.0};
  Complex deriv{0.0};
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
  return {value, deriv};
}

Poly derivative(const Poly& p) {
  if (p.c.size() == 1) return Poly{Complex{0.0}};
  std::vector<Complex> d(p.c.size() - 1);
  for (std::size_t k = 1; k < p.c.size(); ++k) d[k - 1] = static_cast<double>(k) * p.c[k];
  return Poly{std::move(d)};
}

Poly add(const Poly& a, const Poly& b) {
  std::vector<Complex> s(std::max(a.c.size(), b.c.size()), Complex{0.0});
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.at(k) + b.at(k);
  return Poly{std::move(s)};
}

Poly subtract(const Poly& a, const Poly& b) {
  std::vector<Complex> s(std::max(a.c.size(), b.c.size()), Complex{0.0});
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.at(k) - b.at(k);
  return Poly{std::move(s)};
}

Poly multiply(const Poly& a, const Poly& b) {
  std::vector<Complex> prod(a.c.size() + b.c.size() - 1, Complex{0.0});
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == Complex{0.0}) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) prod[i + j] += a.c[i] * b.c[j];
  }
  return Poly{std::move(prod)};
}

Poly scale(const Poly& p, Complex s) {
  std::vector<Complex> out(p.c);
  for (auto& x : out) x *= s;
  return Poly{std::move(out)};
}

Poly pow(const Poly& p, int t) {
  if (t < 0) throw std::invalid_argument("pow: negative exponent");
  Poly result{Complex{1.0}};
  Poly base = p;
  while (t > 0) {
    if (t & 1) result = multiply(result, base);
    t >>= 1;
    if (t > 0) base = multiply(base, base);
  }
  return result;
}

Poly monomial(int k, Complex lead) {
  if (k < 0) throw std::invalid_argument("monomial: negative power");
  std::vector<Complex> c(static_cast<std::size_t>(k) + 1, Complex{0.0});
  c.back() = lead;
  return Poly{std::move(c)};
}

Poly n_inverse(const Poly& h, int n) {
  if (n < 0) throw std::invalid_argument("n_inverse: n must be >= 0");
  if (h.true_degree() > n) throw std::invalid_argument("n_inverse: polynomial degree exceeds n");
  std::vector<Complex> rev(static_cast<std::size_t>(n) + 1, Complex{0.0});
  for (int k = 0; k <= n; ++k) rev[static_cast<std::size_t>(k)] = h.at(static_cast<std::size_t>(n - k));
  return Poly{std::move(rev)};
}

Poly t_root_transform(const Poly& r, int T) {
  if (T < 1) throw std::invalid_argument("t_root_transform: T must be >= 1");
  std::vector<Complex> out(r.c.size() * static_cast<std::size_t>(T) - static_cast<std::size_t>(T) + 2,
                           Complex{0.0});
  for (std::size_t k = 0; k < r.c.size(); ++k) out[k * static_cast<std::size_t>(T) + 1] = r.c[k];
  return Poly{std::move(out)};
}

Poly trimmed(const Poly& p) {
  int d = p.true_degree();
  if (d < 0) return Poly{Complex{0.0}};
  return Poly{std::vector<Complex>(p.c.begin(), p.c.begin() + d + 1)};
}

bool coeff_close(const Poly& a, const Poly& b, double tol) {
  std::size_t n = std::max(a.c.size(), b.c.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(a.at(k) - b.at(k)) > tol) return false;
  }
  return true;
}

double coeff_norm1(const Poly& p) {
  double s = 0.0;
  for (const auto& x : p.c) s += std::abs(x);
  return s;
}

}  // namespace cyclestab
