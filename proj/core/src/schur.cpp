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

#include "cyclestab/schur.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cyclestab/errors.hpp"
#include "cyclestab/roots.hpp"

namespace cyclestab {

bool schur_cohn_stable(const Poly& p) {
  Poly t = trimmed(p);
  const int deg = t.true_degree();
  if (deg < 1) throw std::invalid_argument("schur_cohn_stable: true degree must be >= 1");

  // Reflection-coefficient recursion: reduce the degree by one per step; all
  // roots lie in the open disk iff every reflection coefficient has modulus
  // strictly below one. The reduced leading coefficient
  // (|a_k|^2 - |a_0|^2)/conj(a_k) never vanishes while that holds.
  std::vector<Complex> c = t.c;
  for (int k = deg; k >= 1; --k) {
    const Complex a0 = c[0];
    const Complex ak = c[static_cast<std::size_t>(k)];
    if (ak == Complex{0.0}) return false;  // degenerate step, conservative verdict
    const Complex r = a0 / std::conj(ak);
    if (std::abs(r) >= 1.0) return false;
    std::vector<Complex> next(static_cast<std::size_t>(k));
    double peak = 0.0;
    for (int j = 0; j < k; ++j) {
      next[static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(j + 1)] - r * std::conj(c[static_cast<std::size_t>(k - j - 1)]);
      peak = std::max(peak, std::abs(next[static_cast<std::size_t>(j)]));
    }
    if (peak > 0.0) {
      for (auto& x : next) x /= peak;  // rescaling keeps the recursion in range
    }
    c = std::move(next);
  }
  return true;
}

SchurVerdict schur_test(const Poly& p, const Config& cfg) {
  Poly t = trimmed(p);
  if (t.true_degree() < 1) throw std::invalid_argument("schur_test: true degree must be >= 1");

  RootSet rs = find_roots(t, cfg);
  double max_modulus = 0.0;
  for (auto r : rs.roots) max_modulus = std::max(max_modulus, std::abs(r));

  SchurVerdict verdict;
  verdict.max_modulus = max_modulus;
  verdict.margin = 1.0 - max_modulus;
  verdict.stable = max_modulus < 1.0 - cfg.strictness_tolerance;
  verdict.method = SchurMethod::roots;

  const bool recursion = schur_cohn_stable(t);
  if (recursion != verdict.stable && std::abs(verdict.margin) > cfg.cross_check_margin) {
    std::ostringstream msg;
    msg << "schur_test: root-modulus check says " << (verdict.stable ? "stable" : "unstable")
        << " but Schur-Cohn says " << (recursion ? "stable" : "unstable")
        << " with margin " << verdict.margin;
    throw CrossCheckError(msg.str());
  }
  return verdict;
}

}  // namespace cyclestab
