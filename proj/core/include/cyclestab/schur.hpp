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

enum class SchurMethod { roots, schur_cohn };

struct SchurVerdict {
  bool stable = false;
  double max_modulus = 0.0;          // largest root modulus
  double margin = 0.0;               // 1 - max_modulus
  SchurMethod method = SchurMethod::roots;  // provenance of max_modulus
};

/// Schur-Cohn recursion on reflection coefficients; exact open-disk verdict,
/// no root extraction. Degenerate steps (a vanishing reduced polynomial)
/// report not-stable, which is the conservative answer.
bool schur_cohn_stable(const Poly& p);

/// Decides whether all roots lie strictly inside the unit disk. Runs both the
/// root-modulus check and the Schur-Cohn recursion and requires agreement:
/// a disagreement while |margin| > cfg.cross_check_margin throws
/// CrossCheckError. "stable" means max_modulus < 1 - cfg.strictness_tolerance,
/// so boundary cases come back unstable with a tell-tale tiny margin.
SchurVerdict schur_test(const Poly& p, const Config& cfg = default_config());

}  // namespace cyclestab
