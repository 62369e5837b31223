// Copyright 2026 The qbl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qbl {

// Tolerances shared by every module. Dimensions stay below ~4096 so double
// precision leaves plenty of headroom at these levels.
inline constexpr double kEpsUnitary = 1e-9;
inline constexpr double kEpsNorm = 1e-9;
inline constexpr double kPassTolerance = 1e-9;

// Guard applied before taking ceilings of real-valued query bounds, so that a
// bound of 1 + 2e-16 is still read as 1 query.
inline constexpr double kCeilGuard = 1e-9;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Thrown when an operation is handed arguments that violate its contract
/// (dimension mismatches, out-of-range indices, malformed algorithms).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qbl
