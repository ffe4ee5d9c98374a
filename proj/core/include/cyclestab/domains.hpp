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

#include <string>
#include <vector>

#include "cyclestab/config.hpp"
#include "cyclestab/poly.hpp"

namespace cyclestab {

/// Supported shapes of the admissible-multiplier region M.
enum class SetKind {
  point,            // one multiplier mu
  real_segment,     // {Im z = 0, -mu_M <= Re z <= -1}
  horocycle_disk,   // {|z + mu_M/2| <= mu_M/2}, tangent to the origin from the left
  sector,           // {|z| <= mu_M, |arg z| >= theta}
  repelling_point,  // a point constrained to the complement of the unit disk
};

struct MultiplierSet {
  SetKind kind = SetKind::point;
  double size = 1.0;            // mu_M = sup |z| over M (>= 1 for non-point kinds)
  double half_angle_gap = 0.0;  // theta in (0, pi], sector kind only
  Complex mu{};                 // point kinds only

  static MultiplierSet point(Complex mu);
  /// Validates |mu| >= 1 and mu != 1 on top of the point kind.
  static MultiplierSet repelling_point(Complex mu);
  static MultiplierSet real_segment(double mu_M);
  static MultiplierSet horocycle(double mu_M);
  static MultiplierSet sector(double mu_M, double theta);
};

/// mu_M for any kind (|mu| for point kinds).
double size_of(const MultiplierSet& m);

/// The dual region data used throughout: M* = {1/z : z in M}, and
/// lambda_Omega = distance from the complement of Omega = (C^ \ M*)^{1/T} to
/// the origin, which satisfies mu_M = lambda_Omega^{-T}.
struct DomainGeometry {
  std::string m_star_description;
  double lambda_omega = 0.0;
  double relation_residual = 0.0;  // |mu_M * lambda_omega^T - 1|
};

DomainGeometry domain_geometry(const MultiplierSet& m, int T);

enum class RegionVerdict { inside, boundary, outside };

/// Result of classifying a fixed-point multiplier against the order-n domain
/// (the set of multipliers an averaging set of length n can stabilize). The
/// witness is the disk point the simplest-polynomial designer consumes.
struct MembershipResult {
  RegionVerdict verdict = RegionVerdict::outside;
  Complex witness{};        // minimizing zeta = 1 - (1 - mu)^{1/n}
  double witness_modulus = 0.0;
};

/// Classifies mu against the order-n domain by checking the n-th roots w_k of
/// 1 - mu: mu belongs iff some zeta_k = 1 - w_k lies in the open unit disk.
/// Ties in |zeta| are broken towards positive imaginary part. mu == 1 is the
/// punctured point and always classifies outside. Throws for n < 1.
MembershipResult order_domain_classify(Complex mu, int n,
                                       const Config& cfg = default_config());

/// Uniform samples of the boundary curve z(phi) = 1 - 2^n cos^n(phi/n) e^{i phi}
/// for phi in [-pi, pi]; a cardioid for n = 2, Cayley's sextic for n = 3.
struct BoundaryCurve {
  int n = 1;
  std::vector<std::pair<double, Complex>> samples;  // (phi, point)
};

BoundaryCurve order_domain_boundary(int n, int resolution);

/// Certified lower bound on the averaging-set length needed to cover M for
/// cycle length T:
///   point          -> log2(|mu| + 1)
///   real_segment   -> lambda^{-T/2} / (4T)  with lambda = mu_M^{-1/T}
///   horocycle_disk -> mu_M / 8              (half-plane estimate)
///   sector         -> sqrt(mu_M / 27)       (general simply connected bound;
///                     the sharp growth for sectors is exponential but carries
///                     no explicit constant, so it is reported as an advisory
///                     elsewhere, not here)
/// Throws std::invalid_argument for unsupported kinds.
double degree_lower_bound(const MultiplierSet& m, int T);

/// Coefficient of z^{kT+1} in the T-symmetric slit mapping
/// 2^{2/T} z / (1 - z^T)^{2/T}.
double koebe_coefficient(int T, int k);

/// Frozen growth constants C_T (fitted once over k <= 256) with
/// |c_k| <= C_T k^{2/T - 1} for k >= 1. Supported for T in [1, 6].
double koebe_growth_constant(int T);

/// True iff every coefficient of q obeys |q_k| <= binom(n, k) |w|, the bound
/// range omission forces on coefficients. Preconditions: q(0) = 0 and w is
/// actually omitted (checked via omission_test; violations throw).
bool coefficient_bound_check(const Poly& q, Complex w, const Config& cfg = default_config());

/// pi * sum k |q_k|^2; the area of the image counted with multiplicity, equal
/// to the geometric area exactly when q is univalent. Requires q(0) = 0.
double area_of_image(const Poly& q);

/// Helper for the half-plane coefficient principle: a polynomial with
/// q(0) = 0 whose image lies in {Re w > -1/2} has all |q_k| <= 1. Returns the
/// sampled image check and the coefficient check separately.
struct HalfPlaneCheck {
  bool maps_into_half_plane = false;
  bool coefficients_bounded = false;
  double min_real_part = 0.0;
  double max_coefficient_modulus = 0.0;
};

HalfPlaneCheck half_plane_coefficient_check(const Poly& q, int samples = 4096);

}  // namespace cyclestab
