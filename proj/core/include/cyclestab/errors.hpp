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

#include <stdexcept>
#include <string>

namespace cyclestab {

/// Two independent methods answered the same question differently while both
/// margins were comfortably above the waiver threshold. This is never a
/// property of the input; it signals a numerical bug, so it gets its own type
/// and the CLI maps it to a dedicated exit code.
class CrossCheckError : public std::runtime_error {
 public:
  explicit CrossCheckError(const std::string& what) : std::runtime_error(what) {}
};

/// A root finder ran out of iterations in both the primary and the fallback
/// path. Reported, never silent.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclestab
