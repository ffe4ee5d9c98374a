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

#include <nlohmann/json.hpp>

#include "cyclestab/designers.hpp"
#include "cyclestab/domains.hpp"
#include "cyclestab/duality.hpp"
#include "cyclestab/simulator.hpp"

namespace cyclestab {

/// All JSON produced here uses ordered_json with a fixed field order, so
/// identical inputs give byte-identical output. Complex numbers are
/// two-element arrays [re, im].
using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// CLI/text syntax: "re", "imi", "re+imi", "re-imi", "i", "-i".
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

/// Target syntax: "point:2-1.5i", "segment:3", "horocycle:8", "sector:6,1.57".
MultiplierSet parse_target(const std::string& text);
std::string format_target_kind(SetKind kind);
Json target_to_json(const MultiplierSet& m);
MultiplierSet target_from_json(const Json& j);

/// {method, T, n, a, target, margin, probes_passed}
Json design_result_to_json(const DesignResult& r);
std::string format_method(DesignMethod m);
DesignMethod parse_method(const std::string& text);

/// Reads either a full design-result document or a bare {a, T} object.
AveragingSet averaging_set_from_json(const Json& j);
Json averaging_set_to_json(const AveragingSet& design);

Json stability_report_to_json(const StabilityReport& report);
Json cycle_to_json(const CycleInfo& cycle);

/// Map syntax: "quadratic:-2", "logistic:3.7", "poly:c0,c1,c2,...".
MapSpec parse_map(const std::string& text);

/// Columns: phi,re,im
void write_boundary_csv(std::ostream& out, const BoundaryCurve& curve);

/// Columns: step,re,im,distance (distance empty when no target was tracked).
void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& record);
Json trajectory_summary_to_json(const TrajectoryRecord& record);

}  // namespace cyclestab
