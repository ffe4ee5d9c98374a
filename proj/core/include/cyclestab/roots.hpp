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

#include "cyclestab/config.hpp"
#include "cyclestab/poly.hpp"

namespace cyclestab {

/// All roots of a polynomial, counted with multiplicity. Multiple roots are
/// reported as repeated copies of a refined cluster centroid, so members of a
/// multiplicity-m cluster coincide exactly in the output.
struct RootSet {
  std::vector<Complex> roots;  // true-degree many entries, sorted by (Re, Im)
  double residual = 0.0;       // max over roots of |p(root)| / (1 + |leading|)
  bool used_fallback = false;  // companion-matrix eigenvalues were needed
  int iterations = 0;          // Aberth iterations spent
};

/// Aberth-Ehrlich simultaneous iteration started on a perturbed circle at the
/// Cauchy bound, with a companion-matrix eigenvalue fallback if the iteration
/// has not converged within cfg.root_max_iterations. Roots within
/// cfg.cluster_radius of each other (or within the rounding scatter a multiple
/// root produces) are merged into a cluster; the centroid is then polished via
/// Newton on the (m-1)-th derivative, which restores full accuracy for an
/// m-fold root.
///
/// Throws std::invalid_argument for the zero polynomial or true degree < 1,
/// ConvergenceError if both paths fail.
RootSet find_roots(const Poly& p, const Config& cfg = default_config());

}  // namespace cyclestab
