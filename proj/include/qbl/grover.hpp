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

#include <optional>
#include <stdexcept>
#include <string>

#include "qbl/query_model.hpp"

namespace qbl {

struct GroverParams {
  int n = 2;
  int t = 0;
  /// When set, t must equal min_queries(n, *exact_target).
  std::optional<double> exact_target;
};

/// Textbook Grover search with W = 1: U_0 sends |0> to the uniform
/// superposition s over blocks 1..N, every later U_t is 2|s><s| - I on blocks
/// 1..N and the identity on block 0.
QueryAlgorithm build_grover(const GroverParams& params);
inline QueryAlgorithm build_grover(int n, int t) { return build_grover({n, t, std::nullopt}); }

/// sin^2((2t + 1) arcsin(1/sqrt(N)))
double grover_success_closed_form(int n, int t);

/// Raised when the tuned construction cannot reach the requested probability.
class TuningError : public std::runtime_error {
 public:
  TuningError(const std::string& what, double best_achieved)
      : std::runtime_error(what), best_achieved_(best_achieved) {}
  double best_achieved() const { return best_achieved_; }

 private:
  double best_achieved_;
};

struct ExactGrover {
  QueryAlgorithm algorithm;
  int queries = 0;
  /// false when plain Grover iterations already reach the target
  bool tuned = false;
  /// Start state is cos(a)|0> + sin(a)|s>; pi/2 for plain Grover.
  double mixing_angle = 0.0;
  double achieved = 0.0;  // simulated min_success
};

/// Amplitude amplification that succeeds with probability at least p using
/// exactly min_queries(n, p) queries. When plain iterations overshoot, part of
/// the start amplitude is parked on block 0 (which the oracle never touches)
/// and the mixing angle is solved for numerically against the simulated
/// success probability.
ExactGrover build_exact_grover(int n, double p);

/// Grover-type algorithm whose start state is cos(a)|0> + sin(a)|s> and whose
/// non-query steps reflect about that start state.
QueryAlgorithm build_mixed_grover(int n, int t, double mixing_angle);

}  // namespace qbl
