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

#include "qbl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qbl/bounds.hpp"
#include "qbl/grover.hpp"
#include "qbl/metrics.hpp"
#include "qbl/optimize.hpp"

namespace qbl {

namespace {

LemmaReport make_report(LemmaId id, const QueryAlgorithm& a, double measured, double bound,
                        double slack, std::uint64_t seed) {
  LemmaReport r;
  r.lemma_id = id;
  r.n = a.n();
  r.t = a.queries();
  r.w = a.w();
  r.measured = measured;
  r.bound = bound;
  r.slack = slack;
  r.passed = slack >= -kPassTolerance;
  r.seed = seed;
  return r;
}

}  // namespace

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L1: return "L1";
    case LemmaId::L2: return "L2";
    case LemmaId::L3: return "L3";
    case LemmaId::L4: return "L4";
    case LemmaId::L5: return "L5";
    case LemmaId::L6: return "L6";
    case LemmaId::T1: return "T1";
    case LemmaId::T2: return "T2";
  }
  return "?";
}

std::optional<LemmaId> parse_lemma_id(const std::string& text) {
  for (LemmaId id : {LemmaId::L1, LemmaId::L2, LemmaId::L3, LemmaId::L4, LemmaId::L5,
                     LemmaId::L6, LemmaId::T1, LemmaId::T2}) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

LemmaReport check_growth_distance(const QueryAlgorithm& a, std::uint64_t seed) {
  const double measured = average_final_distance(a);
  const double bound = lemma_growth_bounds(a.n(), a.queries()).distance;
  return make_report(LemmaId::L3, a, measured, bound, bound - measured, seed);
}

LemmaReport check_growth_angle(const QueryAlgorithm& a, std::uint64_t seed) {
  const double measured = average_final_angle(a);
  const double bound = lemma_growth_bounds(a.n(), a.queries()).angle;
  return make_report(LemmaId::L4, a, measured, bound, bound - measured, seed);
}

LemmaReport check_final_distance(const QueryAlgorithm& a, std::uint64_t seed) {
  const SuccessSplit worst = worst_case_split(a);
  const double measured = average_final_distance(a);
  const double bound = detail::final_bounds_formula(a.n(), worst.success, worst.failure).distance;
  return make_report(LemmaId::L5, a, measured, bound, measured - bound, seed);
}

LemmaReport check_final_angle(const QueryAlgorithm& a, std::uint64_t seed) {
  const SuccessSplit worst = worst_case_split(a);
  const double measured = average_final_angle(a);
  const double bound = detail::final_bounds_formula(a.n(), worst.success, worst.failure).angle;
  return make_report(LemmaId::L6, a, measured, bound, measured - bound, seed);
}

LemmaReport check_theorem(const QueryAlgorithm& a, TheoremVersion version, std::uint64_t seed) {
  const SuccessSplit worst = worst_case_split(a);
  const double measured = a.queries();
  double bound = 0.0;
  LemmaId id = LemmaId::T1;
  if (version == TheoremVersion::distance) {
    bound = detail::distance_bound_formula(a.n(), worst.success, worst.failure);
  } else {
    id = LemmaId::T2;
    bound = detail::angle_bound_formula(a.n(), worst.success, worst.failure);
  }
  return make_report(id, a, measured, bound, measured - bound, seed);
}

LemmaReport check_cauchy_schwarz(LemmaId id, int n, std::uint64_t seed) {
  if (id != LemmaId::L1 && id != LemmaId::L2) {
    throw InvalidInput("check_cauchy_schwarz handles only L1 and L2");
  }
  const bool distance = id == LemmaId::L1;
  const OptimizationResult opt =
      maximize_cs(distance ? ProblemKind::cs_distance : ProblemKind::cs_angle, n,
                  kDefaultCsBudget, kDefaultCsRestarts, seed);
  const double bound = distance ? lemma_cs_max(n) : lemma_cs_angle_max(n);
  LemmaReport r;
  r.lemma_id = id;
  r.n = n;
  r.measured = opt.best_value;
  r.bound = bound;
  r.slack = kCsAgreement - std::abs(opt.best_value - bound);
  r.passed = r.slack >= -kPassTolerance;
  r.seed = seed;
  return r;
}

LemmaReport check(LemmaId id, const QueryAlgorithm& a, std::uint64_t seed) {
  switch (id) {
    case LemmaId::L3: return check_growth_distance(a, seed);
    case LemmaId::L4: return check_growth_angle(a, seed);
    case LemmaId::L5: return check_final_distance(a, seed);
    case LemmaId::L6: return check_final_angle(a, seed);
    case LemmaId::T1: return check_theorem(a, TheoremVersion::distance, seed);
    case LemmaId::T2: return check_theorem(a, TheoremVersion::angle, seed);
    case LemmaId::L1:
    case LemmaId::L2: break;
  }
  throw InvalidInput(to_string(id) + " is not an algorithm-level check");
}

QueryAlgorithm random_algorithm(int n, int w, int t, RandomSource& rng) {
  if (n < 1 || w < 1 || t < 0) throw InvalidInput("invalid algorithm shape");
  const Eigen::Index d = static_cast<Eigen::Index>(n + 1) * w;
  std::vector<UnitaryMatrix> us;
  us.reserve(t + 1);
  for (int k = 0; k <= t; ++k) us.push_back(haar_random_unitary(d, rng));
  return QueryAlgorithm(n, w, std::move(us));
}

double classical_baseline_mc(int n, double p, long trials, RandomSource& rng) {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  const int queries = classical_queries(n, p).probabilistic;
  std::vector<int> order(n);
  long hits = 0;
  for (long trial = 0; trial < trials; ++trial) {
    const int marked = static_cast<int>(rng.uniform_index(n)) + 1;
    std::iota(order.begin(), order.end(), 1);
    bool found = false;
    // partial Fisher-Yates: the first `queries` slots are the queried indices
    for (int k = 0; k < queries; ++k) {
      const std::size_t j = k + rng.uniform_index(n - k);
      std::swap(order[k], order[j]);
      if (order[k] == marked) {
        found = true;
        break;
      }
    }
    if (!found) {
      const int guess = order[queries + rng.uniform_index(n - queries)];
      found = guess == marked;
    }
    hits += found ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

CampaignSummary run_campaign(const CampaignConfig& config,
                             const std::function<void(const LemmaReport&)>& sink) {
  auto valid = [](IntRange r, int min) { return r.lo >= min && r.hi >= r.lo; };
  if (!valid(config.n, 1) || !valid(config.t, 0) || !valid(config.w, 1)) {
    throw InvalidInput("campaign ranges must be non-empty with N >= 1, T >= 0, W >= 1");
  }
  if (config.count < 0) throw InvalidInput("instance count must be non-negative");
  if (config.lemmas.empty()) throw InvalidInput("campaign needs at least one lemma");

  CampaignSummary summary;
  summary.worst_slack = std::numeric_limits<double>::infinity();
  auto emit = [&](const LemmaReport& r) {
    ++summary.reports;
    if (!r.passed) ++summary.failures;
    summary.worst_slack = std::min(summary.worst_slack, r.slack);
    sink(r);
  };
  auto pick = [](IntRange r, RandomSource& rng) {
    return r.lo + static_cast<int>(rng.uniform_index(static_cast<std::size_t>(r.hi - r.lo + 1)));
  };

  // the constrained maxima depend on N alone
  for (LemmaId id : config.lemmas) {
    if (id != LemmaId::L1 && id != LemmaId::L2) continue;
    for (int n = config.n.lo; n <= config.n.hi; ++n) {
      emit(check_cauchy_schwarz(id, n, config.seed));
    }
  }

  const bool needs_algorithms =
      std::any_of(config.lemmas.begin(), config.lemmas.end(),
                  [](LemmaId id) { return id != LemmaId::L1 && id != LemmaId::L2; });
  const int count = needs_algorithms ? config.count : 0;

  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
    RandomSource rng(seed);
    const int n = pick(config.n, rng);
    const int w = pick(config.w, rng);
    const int t = pick(config.t, rng);
    const QueryAlgorithm a = random_algorithm(n, w, t, rng);
    for (LemmaId id : config.lemmas) {
      if (id != LemmaId::L1 && id != LemmaId::L2) emit(check(id, a, seed));
    }
    ++summary.random_instances;
  }

  if (needs_algorithms && config.include_grover) {
    for (int n = std::max(2, config.n.lo); n <= config.n.hi; ++n) {
      for (int t = config.t.lo; t <= config.t.hi; ++t) {
        const QueryAlgorithm a = build_grover(n, t);
        for (LemmaId id : config.lemmas) {
          if (id != LemmaId::L1 && id != LemmaId::L2) emit(check(id, a, config.seed));
        }
        ++summary.constructed_instances;
      }
    }
  }
  if (summary.reports == 0) summary.worst_slack = 0.0;
  return summary;
}

}  // namespace qbl
