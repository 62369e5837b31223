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

// Numerical certification harnesses: each check evaluates one lemma or
// theorem on a concrete algorithm and reports the measured quantity against
// its closed-form bound.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qbl/hilbert.hpp"
#include "qbl/query_model.hpp"

namespace qbl {

enum class LemmaId { L1, L2, L3, L4, L5, L6, T1, T2 };

std::string to_string(LemmaId id);
std::optional<LemmaId> parse_lemma_id(const std::string& text);

/// `slack` is oriented so that slack >= -kPassTolerance means the statement
/// holds; `passed` is exactly that predicate.
struct LemmaReport {
  LemmaId lemma_id = LemmaId::L3;
  int n = 0;
  int t = 0;
  int w = 0;
  double measured = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
};

/// measured = average final distance, bound = 2T/sqrt(N).
LemmaReport check_growth_distance(const QueryAlgorithm& a, std::uint64_t seed = 0);
/// measured = average final angle, bound = 2T arcsin(1/sqrt(N)).
LemmaReport check_growth_angle(const QueryAlgorithm& a, std::uint64_t seed = 0);
/// p = min_success(a); measured = average final distance must reach
/// (1/sqrt 2)(1 + sqrt p - sqrt(1-p) - 2/sqrt N).
LemmaReport check_final_distance(const QueryAlgorithm& a, std::uint64_t seed = 0);
/// p = min_success(a); measured = average final angle must reach
/// arcsin(sqrt p) - arcsin(1/sqrt N).
LemmaReport check_final_angle(const QueryAlgorithm& a, std::uint64_t seed = 0);

enum class TheoremVersion { distance, angle };

/// measured = T, bound = distance_bound or angle_bound at p = min_success(a).
LemmaReport check_theorem(const QueryAlgorithm& a, TheoremVersion version,
                          std::uint64_t seed = 0);

/// Maximum accepted gap between the numeric and closed-form constrained maxima.
inline constexpr double kCsAgreement = 1e-6;

/// L1 / L2: numeric constrained maximum vs closed form. slack is
/// kCsAgreement - |measured - bound|.
LemmaReport check_cauchy_schwarz(LemmaId id, int n, std::uint64_t seed = 0);

/// Dispatches L3..L6, T1, T2 on an algorithm.
LemmaReport check(LemmaId id, const QueryAlgorithm& a, std::uint64_t seed = 0);

/// T+1 Haar-random unitaries of dim (N+1)W with the canonical measurement.
QueryAlgorithm random_algorithm(int n, int w, int t, RandomSource& rng);

/// Monte Carlo success rate of the classical strategy that queries
/// T = ceil(pN - 1) distinct random indices and otherwise guesses among the
/// rest.
double classical_baseline_mc(int n, double p, long trials, RandomSource& rng);

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct CampaignConfig {
  std::vector<LemmaId> lemmas;
  IntRange n{2, 8};
  IntRange t{0, 5};
  IntRange w{1, 2};
  int count = 100;
  std::uint64_t seed = 0;
  /// Also check Grover(n, t) for every n, t in range (n >= 2).
  bool include_grover = true;
};

struct CampaignSummary {
  long reports = 0;
  long failures = 0;
  int random_instances = 0;
  int constructed_instances = 0;
  double worst_slack = 0.0;
};

/// Instance i draws its shape and unitaries from derive_seed(seed, i), so any
/// single record can be regenerated from the campaign seed and its index.
CampaignSummary run_campaign(const CampaignConfig& config,
                             const std::function<void(const LemmaReport&)>& sink);

}  // namespace qbl
