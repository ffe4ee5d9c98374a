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
#include "cyclestab/roots.hpp"
#include "cyclestab/schur.hpp"

namespace cyclestab {

/// A stabilization design: averaging coefficients a_1..a_n applied to states
/// delayed by multiples of the cycle length.
struct AveragingSet {
  std::vector<Complex> a;  // a[0] is a_1; a_1 != 0 and sum a_k = 1
  int cycle_length = 1;    // T >= 1

  int order() const { return static_cast<int>(a.size()); }
};

/// Throws std::invalid_argument unless a is non-empty, a_1 != 0,
/// sum a_k = 1 within 1e-12 and cycle_length >= 1.
void validate(const AveragingSet& design);

/// p(z) = a_n + a_{n-1} z + ... + a_1 z^{n-1}; the coefficients enter in
/// reverse order of the averaging set.
Poly design_polynomial(const AveragingSet& design);

/// Both sides of the root-location / range-omission correspondence for one
/// design: p, its (n-1)-inverse p*, q(z) = z (p*(z))^T and the transformed
/// q_root(z) = z p*(z^T) whose spectrum lies in T*Z + 1. The lowest exponent
/// of q_root is always 1.
struct DualityBundle {
  Poly p;
  Poly p_star;
  Poly q;
  Poly q_root;
};

DualityBundle build_duality(const AveragingSet& design);

/// chi(z) = z^{(n-1)T+1} - mu * p(z)^T; local stability of the controlled
/// cycle is Schur stability of this polynomial. Throws for mu == 0.
Poly build_chi(const AveragingSet& design, Complex mu);

/// Outcome of the range-omission test "w not in q(closed unit disk)".
struct OmissionVerdict {
  bool omitted = false;
  double min_boundary_distance = 0.0;  // min over sampled |z| = 1 of |q(z) - w|
  int winding_zero_count = 0;          // zeros of q - w inside the open disk
  int samples_used = 0;
  /// w sits within the omission tolerance of the boundary image; reported as
  /// not-omitted. Verdicts with this flag are excluded from cross-checks.
  bool indeterminate = false;
};

/// Argument-principle zero count of q - w in the open disk, with adaptive
/// boundary sampling (doubling from cfg.winding_initial_samples until the
/// winding integer is stable across two refinements), plus a derivative-based
/// Lipschitz gap bound certifying boundary clearance. Requires q(0) = 0.
OmissionVerdict omission_test(const Poly& q, Complex w, const Config& cfg = default_config());

/// Everything the two-route membership decision produces; the CLI serializes
/// this as the stability report.
struct StabilityReport {
  Complex mu{};
  int cycle_length = 1;
  SchurVerdict schur;
  RootSet chi_roots;
  OmissionVerdict q_omission;                    // 1/mu against q
  std::vector<OmissionVerdict> branch_omissions; // all T branches of mu^{-1/T} against q_root
  bool methods_agree = true;
};

StabilityReport stability_report(const AveragingSet& design, Complex mu,
                                 const Config& cfg = default_config());

/// Membership of mu in the stabilization domain of the design, decided by the
/// Schur route and cross-checked against the omission route: stable iff 1/mu
/// is omitted by q iff every branch value of mu^{-1/T} is omitted by q_root.
/// Disagreement with both margins above cfg.cross_check_margin throws
/// CrossCheckError. Throws std::invalid_argument for mu == 0.
SchurVerdict in_stability_domain(const AveragingSet& design, Complex mu,
                                 const Config& cfg = default_config());

}  // namespace cyclestab
