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
#include "cyclestab/duality.hpp"
#include "cyclestab/poly.hpp"

namespace cyclestab {

enum class MapKind { quadratic_c, logistic, polynomial };

/// One-dimensional map under study: z^2 + c, lambda x (1 - x), or an arbitrary
/// polynomial of degree >= 2.
struct MapSpec {
  MapKind kind = MapKind::quadratic_c;
  Complex parameter{};           // c or lambda
  std::vector<Complex> coeffs{}; // polynomial kind only, ascending powers

  static MapSpec quadratic(Complex c);
  static MapSpec logistic(Complex lambda);
  static MapSpec polynomial(std::vector<Complex> coeffs);
};

Complex map_eval(const MapSpec& map, Complex z);
Complex map_derivative(const MapSpec& map, Complex z);
Poly map_poly(const MapSpec& map);

/// A periodic orbit with its minimal period and multiplier.
struct CycleInfo {
  std::vector<Complex> points;  // s_1 .. s_T, consecutive under the map
  int period = 1;               // minimal
  Complex multiplier{};         // product of f'(s_i) over the minimal cycle
  bool repelling = false;       // |multiplier| > 1
};

/// All solutions of f^T(z) = z grouped into cycles, minimal periods computed,
/// multipliers attached. The degree of f^T - z grows as d^T, so T is capped at
/// 5 (and the composed degree at 4096) for polynomial maps.
std::vector<CycleInfo> find_cycles(const MapSpec& map, int T,
                                   const Config& cfg = default_config());

/// A simulated orbit together with its distance record against a target cycle.
struct TrajectoryRecord {
  std::vector<Complex> points;
  std::vector<double> distances;  // per-step min distance to the cycle points
  bool converged = false;
  bool escaped = false;
  int escape_step = -1;
  int steps_to_converge = -1;
  double empirical_rate = 0.0;   // geometric fit over the decay tail
  double predicted_rate = 0.0;   // max root modulus of chi
  int fit_samples = 0;           // points used by the rate fit
};

/// The uncontrolled orbit. Divergence (|z| > cfg.escape_radius) is a recorded
/// outcome, not an error. Distances and convergence are filled only when a
/// target cycle is supplied.
TrajectoryRecord run_plain(const MapSpec& map, Complex z0, int steps,
                           const CycleInfo* target = nullptr,
                           const Config& cfg = default_config());

/// The delayed-feedback recurrence
///   z_m = a_1 f(z_{m-1}) + a_2 f(z_{m-1-T}) + ... + a_n f(z_{m-1-(n-1)T})
/// seeded with (n-1)T + 1 points of plain iteration from z0. Converged once
/// the distance to the cycle stays below cfg.convergence_tolerance for 10*T
/// consecutive steps; the empirical rate is a least-squares geometric fit over
/// the final third of the decay regime. Throws when design.cycle_length
/// differs from the cycle's minimal period.
TrajectoryRecord run_stabilized(const MapSpec& map, const AveragingSet& design,
                                const CycleInfo& cycle, Complex z0, int steps,
                                const Config& cfg = default_config());

/// True iff the fitted rate is within 20% of the predicted one. Throws for
/// records that never converged or whose decay tail was too short to fit
/// (fewer than 30 samples).
bool rate_check(const TrajectoryRecord& record);

}  // namespace cyclestab
