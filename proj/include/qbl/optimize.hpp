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

// Brute-force maximizers used as an independent check on the closed-form
// bounds: the two constrained sums behind the per-query budgets, and the best
// worst-case success probability over all algorithms at tiny (N, W, T).

#include <cstdint>
#include <span>
#include <vector>

#include "qbl/hilbert.hpp"
#include "qbl/query_model.hpp"

namespace qbl {

enum class ProblemKind {
  cs_distance,     // max sum a_i  s.t. a_i >= 0, sum a_i^2 <= 1
  cs_angle,        // max sum t_i  s.t. 0 <= t_i <= pi/2, sum sin^2 t_i <= 1
  best_algorithm,  // max over U_0..U_T of min_y success probability
};

const char* to_string(ProblemKind kind);

struct OptimizationProblem {
  ProblemKind kind = ProblemKind::cs_distance;
  int n = 1;
  int w = 1;  // best_algorithm only
  int t = 0;  // best_algorithm only
  long budget = 0;    // objective evaluations per restart; 0 picks the default
  int restarts = 0;   // 0 picks the default
  std::uint64_t seed = 0;
};

struct OptimizationResult {
  double best_value = 0.0;
  std::vector<double> argmax;
  long evaluations = 0;
  /// The two best restarts agree to within 1e-6.
  bool converged = false;
  std::vector<double> restart_values;
};

inline constexpr long kDefaultCsBudget = 20000;
inline constexpr int kDefaultCsRestarts = 4;
inline constexpr long kDefaultSearchBudget = 20000;
inline constexpr int kDefaultSearchRestarts = 6;
inline constexpr int kMaxSearchDim = 16;
inline constexpr int kMaxSearchQueries = 3;
inline constexpr double kConvergenceSpread = 1e-6;

OptimizationResult maximize_cs(ProblemKind kind, int n, long budget = kDefaultCsBudget,
                               int restarts = kDefaultCsRestarts, std::uint64_t seed = 0);

/// Requires (n+1)*w <= 16 and t <= 3. argmax holds, for each U_t in turn, the
/// d^2 real parameters of a Hermitian H_t with U_t = exp(i H_t): the d
/// diagonal entries, then (re, im) of each entry above the diagonal, row by row.
OptimizationResult best_success(int n, int w, int t, long budget, int restarts,
                                RandomSource& rng);

OptimizationResult optimize(const OptimizationProblem& problem);

/// d x d Hermitian matrix from d^2 reals, layout as in best_success.
Eigen::MatrixXcd hermitian_from_parameters(Eigen::Index d, std::span<const double> params);
/// exp(i H) through the eigendecomposition of H.
Eigen::MatrixXcd exp_i_hermitian(const Eigen::MatrixXcd& h);

QueryAlgorithm algorithm_from_parameters(int n, int w, int t, std::span<const double> params);
/// Inverse of algorithm_from_parameters up to 2*pi branch choices: reads the
/// generators off a Schur decomposition of every U_t.
std::vector<double> parameters_from_algorithm(const QueryAlgorithm& a);

/// Largest p with min_queries(n, p) <= t: sin^2(min((2t + 1) Theta, pi/2)).
double max_success_allowed(int n, int t);

struct TightnessReport {
  int n = 0;
  int w = 1;
  int t = 0;
  double optimizer_p = 0.0;  // best_success
  double grover_p = 0.0;     // simulated Grover-family algorithm with t queries
  double bound_p = 0.0;      // max_success_allowed
  bool converged = false;
  bool agree = false;        // all three within 1e-3
  bool within_bound = false; // optimizer_p <= bound_p + 1e-3
  OptimizationResult optimization;
};

TightnessReport tightness_report(int n, int w, int t, long budget, int restarts,
                                 RandomSource& rng);

}  // namespace qbl
