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

#include <iosfwd>
#include <string>

namespace cyclestab {

/// Numerical knobs shared across the library. Every entry point that needs a
/// tolerance takes a `const Config&` and defaults to `default_config()`, so
/// all functions stay pure and callers can tighten or relax thresholds per
/// call. The CLI loads overrides from a key=value file (CYCLESTAB_CONFIG) and
/// from flags; flags win.
struct Config {
  /// "stable" requires max root modulus < 1 - strictness_tolerance. A root on
  /// the unit circle is reported unstable: a conservative verdict never
  /// certifies a non-working design.
  double strictness_tolerance = 1e-9;

  /// Image-space clearance required to certify that a value is omitted by
  /// q on the closed unit disk.
  double omission_tolerance = 1e-8;

  /// Roots closer than this are reported as one cluster with multiplicity;
  /// the cluster centroid is refined on a derivative before reporting.
  double cluster_radius = 1e-6;

  /// Acceptable max |p(root)| / (1 + |leading coefficient|).
  double root_residual_tol = 1e-10;

  /// Aberth iteration cap before the companion-matrix fallback kicks in.
  int root_max_iterations = 500;

  /// Boundary sampling for winding numbers starts here and doubles until the
  /// integer is stable across two refinements.
  int winding_initial_samples = 4096;
  int winding_max_samples = 1 << 19;

  /// Two verdicts for the same question may disagree only when one of the
  /// margins is below this; a disagreement above it signals a numerical bug
  /// and throws CrossCheckError.
  double cross_check_margin = 1e-6;

  /// Trajectory is converged once the distance to the cycle stays below this
  /// for 10*T consecutive steps.
  double convergence_tolerance = 1e-8;

  /// Stand-in for the neighbourhood of infinity; the simulator works on C.
  double escape_radius = 1e6;

  /// Cap on the averaging-set length a designer may request.
  int max_order = 256;

  /// Designer verification grid: probes spread over the boundary of the
  /// multiplier set plus interior fill.
  int boundary_probes = 64;
  int interior_probes = 16;

  /// Samples per slit ray when certifying the iterated starlike bound.
  int ray_samples = 10000;
};

/// Immutable process-wide defaults.
const Config& default_config();

/// Parse `key=value` lines ('#' starts a comment). Unknown keys throw.
Config parse_config(std::istream& in, Config base = Config{});

/// Load overrides from the file named by the CYCLESTAB_CONFIG environment
/// variable, if set; otherwise returns `base` untouched.
Config config_from_env(Config base = Config{});

/// Set one field by key name; throws std::invalid_argument on unknown keys.
void apply_config_entry(Config& cfg, const std::string& key, const std::string& value);

}  // namespace cyclestab
