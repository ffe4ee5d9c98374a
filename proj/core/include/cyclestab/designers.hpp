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

#include <vector>

#include "cyclestab/config.hpp"
#include "cyclestab/domains.hpp"
#include "cyclestab/duality.hpp"

namespace cyclestab {

enum class DesignMethod { simplest, suffridge, alexander, iterated_starlike, auto_select };

struct DesignRequest {
  MultiplierSet target;
  int cycle_length = 1;
  DesignMethod method = DesignMethod::auto_select;
  int max_order = 0;  // 0 means cfg.max_order
};

struct DesignResult {
  AveragingSet design;
  MultiplierSet target;
  bool verified = false;          // every probe passed in_stability_domain
  std::vector<Complex> probes;    // multipliers actually checked
  double margin = 0.0;            // min Schur margin over the probes
  DesignMethod method_used = DesignMethod::auto_select;
};

/// Coefficients of (1/mu)(z^n - (z - zeta)^n) where zeta is the witness from
/// the order-n domain, giving chi = (z - zeta)^n: all contraction concentrated
/// in one n-fold root. When several witnesses exist the one of smallest
/// modulus is used, since |zeta| is exactly the asymptotic contraction rate.
/// Requires mu strictly inside the order-n domain and mu not in {0, 1}.
DesignResult simplest_design(Complex mu, int n, const Config& cfg = default_config());

struct SuffridgeDesign {
  DesignResult result;
  double lambda = 0.0;  // tan^2(pi / (2(n+1))): the design stabilizes real mu in (-1/lambda, -1]
};

/// The trigonometric univalent polynomial of degree n, normalized to q(1) = 1.
/// Its image omits the real ray (-inf, -lambda(n)], which makes it the real
/// segment design of record.
SuffridgeDesign suffridge_design(int n, const Config& cfg = default_config());

/// a_k = 1 / (l(n) k) with l(n) the n-th harmonic number; maps the disk into a
/// thin region around [0, 1], which suits wide-sector multiplier targets.
/// Verified against a sector sized from the sampled image.
DesignResult alexander_design(int n, const Config& cfg = default_config());

struct StarlikeDesign {
  DesignResult result;
  double slit_bound = 0.0;       // ((T+1)/(T+2))^m, certified max of |q| on the slit rays
  double gamma = 0.0;            // 1 / ((T+1) log2(T+1))
  long long composed_degree = 0; // N = (T+1)^m
  double sampled_ray_max = 0.0;  // measured max of |q| over the T rays
};

/// m-fold composition of the starlike seed q1(z) = z p1(z^T) with
/// p1(z) = ((T+1)/(T+2))(1 + z/(T+1)). The composition keeps nonnegative real
/// coefficients with p(1) = 1 and contracts the T slit rays by
/// ((T+1)/(T+2))^m <= 2 N^{-gamma}. Verified against the real segment of
/// T-cycle multipliers this reach certifies. Requires T >= 2, m >= 1.
StarlikeDesign iterated_starlike_design(int T, int m, const Config& cfg = default_config());

/// Dispatch by target kind with the smallest order that verifies:
///   point                      -> simplest_design at the smallest admissible n
///   real_segment, T = 1        -> suffridge_design with 1/lambda(n) >= mu_M
///   real_segment, T > 1        -> iterated_starlike_design with enough ray reach
///   horocycle_disk             -> suffridge_design grown until the sampled
///                                 image fits the half-plane Re w > -1/mu_M
///   sector                     -> alexander_design grown until probes pass
/// Every result is re-verified on a probe grid over M (boundary + interior).
/// Throws std::runtime_error when max_order is exhausted unverified.
DesignResult auto_design(const DesignRequest& request, const Config& cfg = default_config());

}  // namespace cyclestab
