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


#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qbl/bounds.hpp"
#include "qbl/common.hpp"
#include "qbl/grover.hpp"
#include "qbl/verify.hpp"

using namespace qbl;

namespace {

const std::vector<LemmaId> kAlgorithmChecks = {LemmaId::L3, LemmaId::L4, LemmaId::L5,
                                               LemmaId::L6, LemmaId::T1, LemmaId::T2};

QueryAlgorithm identity_algorithm(int n, int w, int t) {
  const Eigen::Index d = static_cast<Eigen::Index>(n + 1) * w;
  return QueryAlgorithm(n, w, std::vector<UnitaryMatrix>(t + 1, UnitaryMatrix::identity(d)));
}

}  // namespace

TEST_CASE("lemma ids round-trip through text") {
  for (LemmaId id : {LemmaId::L1, LemmaId::L2, LemmaId::L3, LemmaId::L4, LemmaId::L5,
                     LemmaId::L6, LemmaId::T1, LemmaId::T2}) {
    CHECK(parse_lemma_id(to_string(id)) == id);
  }
  CHECK_FALSE(parse_lemma_id("L7").has_value());
  CHECK_FALSE(parse_lemma_id("l3").has_value());
}

TEST_CASE("passed agrees with the sign of the slack") {
  RandomSource rng(7);
  for (int i = 0; i < 50; ++i) {
    const QueryAlgorithm a = random_algorithm(3, 1, 2, rng);
    for (LemmaId id : kAlgorithmChecks) {
      const LemmaReport r = check(id, a, 7);
      CHECK(r.passed == (r.slack >= -1e-9));
      CHECK(r.n == 3);
      CHECK(r.t == 2);
      CHECK(r.w == 1);
      CHECK(r.seed == 7);
    }
  }
}

TEST_CASE("growth checks measure the same values as a dense computation") {
  RandomSource rng(11);
  const QueryAlgorithm a = random_algorithm(4, 2, 3, rng);
  double dist = 0.0, ang = 0.0;
  const Eigen::VectorXcd null = oracle::dense_run(a, 0);
  for (int y = 1; y <= 4; ++y) {
    const Eigen::VectorXcd psi = oracle::dense_run(a, y);
    dist += (psi - null).norm();
    ang += oracle::angle_between(psi, null);
  }
  dist /= 4;
  ang /= 4;
  const LemmaReport l3 = check_growth_distance(a);
  const LemmaReport l4 = check_growth_angle(a);
  CHECK(std::abs(l3.measured - dist) < 1e-12);
  CHECK(std::abs(l4.measured - ang) < 1e-12);
  CHECK(l3.bound == doctest::Approx(2.0 * 3 * 4 / std::sqrt(4.0) / 4).epsilon(1e-14));
  CHECK(l4.bound == doctest::Approx(2.0 * 3 * 4 * oracle::theta_ref(4) / 4).epsilon(1e-14));
}

TEST_CASE("an oracle-blind algorithm has no progress and no success") {
  const QueryAlgorithm a = identity_algorithm(5, 1, 3);
  const LemmaReport l3 = check_growth_distance(a);
  CHECK(l3.measured == 0.0);
  CHECK(l3.passed);
  // the final-state bounds apply to any success level, including zero
  CHECK(check_final_distance(a).passed);
  CHECK(check_final_angle(a).passed);
  CHECK(check_theorem(a, TheoremVersion::distance).passed);
  CHECK(check_theorem(a, TheoremVersion::angle).passed);
}

TEST_CASE("every check passes on Grover") {
  for (int n = 2; n <= 12; ++n) {
    for (int t = 0; t <= 6; ++t) {
      const QueryAlgorithm g = build_grover(n, t);
      for (LemmaId id : kAlgorithmChecks) {
        const LemmaReport r = check(id, g);
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(to_string(id));
        CHECK(r.passed);
      }
    }
  }
}

TEST_CASE("growth bounds are tight for one-query Grover with N = 4") {
  const QueryAlgorithm g = build_grover(4, 1);
  CHECK(std::abs(check_growth_angle(g).slack) < 1e-9);
  CHECK(std::abs(check_final_angle(g).slack) < 1e-9);
  CHECK(std::abs(check_theorem(g, TheoremVersion::angle).slack) < 1e-9);
}

TEST_CASE("Cauchy-Schwarz maxima") {
  for (int n : {1, 2, 5}) {
    const LemmaReport l1 = check_cauchy_schwarz(LemmaId::L1, n, 3);
    const LemmaReport l2 = check_cauchy_schwarz(LemmaId::L2, n, 3);
    CHECK(l1.passed);
    CHECK(l2.passed);
    CHECK(l1.bound == doctest::Approx(std::sqrt(static_cast<double>(n))));
  }
  CHECK_THROWS_AS(check_cauchy_schwarz(LemmaId::L3, 4), InvalidInput);
  CHECK_THROWS_AS(check(LemmaId::L1, build_grover(4, 1)), InvalidInput);
}

TEST_CASE("seeded campaign over random algorithms") {
  CampaignConfig config;
  config.lemmas = kAlgorithmChecks;
  config.n = {2, 8};
  config.t = {0, 5};
  config.w = {1, 2};
  config.count = 150;
  config.seed = 2024;
  std::vector<LemmaReport> seen;
  const CampaignSummary s = run_campaign(config, [&](const LemmaReport& r) { seen.push_back(r); });
  CHECK(s.failures == 0);
  CHECK(s.random_instances == 150);
  CHECK(s.constructed_instances == 7 * 6);
  CHECK(s.reports == static_cast<long>(seen.size()));
  CHECK(s.reports == (150 + 42) * 6);
  CHECK(s.worst_slack >= -1e-9);
  for (const LemmaReport& r : seen) {
    CHECK(r.n >= 2);
    CHECK(r.n <= 8);
    CHECK(r.t <= 5);
  }

  // same seed, same reports
  std::vector<LemmaReport> again;
  run_campaign(config, [&](const LemmaReport& r) { again.push_back(r); });
  REQUIRE(again.size() == seen.size());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    CHECK(again[i].measured == seen[i].measured);
    CHECK(again[i].bound == seen[i].bound);
    CHECK(again[i].seed == seen[i].seed);
  }
}

TEST_CASE("campaign with only the constrained maxima") {
  CampaignConfig config;
  config.lemmas = {LemmaId::L1};
  config.n = {1, 3};
  const CampaignSummary s = run_campaign(config, [](const LemmaReport&) {});
  CHECK(s.reports == 3);
  CHECK(s.random_instances == 0);
  CHECK(s.failures == 0);
}

TEST_CASE("campaign validation") {
  CampaignConfig config;
  config.lemmas = {LemmaId::L3};
  config.n = {5, 4};
  CHECK_THROWS_AS(run_campaign(config, [](const LemmaReport&) {}), InvalidInput);
  config.n = {2, 4};
  config.lemmas.clear();
  CHECK_THROWS_AS(run_campaign(config, [](const LemmaReport&) {}), InvalidInput);
}

TEST_CASE("classical baseline") {
  RandomSource rng(5);
  CHECK(classical_baseline_mc(1, 1.0, 100, rng) == 1.0);
  CHECK(classical_baseline_mc(10, 1.0, 2000, rng) == 1.0);
  // with k queries out of N the success rate is (k + 1) / N
  const double rate = classical_baseline_mc(10, 0.5, 200000, rng);
  CHECK(std::abs(rate - 0.5) < 5 * std::sqrt(0.25 / 200000));
  const double low = classical_baseline_mc(20, 0.01, 200000, rng);
  CHECK(std::abs(low - 0.05) < 5 * std::sqrt(0.05 * 0.95 / 200000));
  CHECK_THROWS_AS(classical_baseline_mc(10, 0.5, 0, rng), InvalidInput);
}

TEST_CASE("random algorithms are deterministic in the seed") {
  RandomSource a(99), b(99);
  const QueryAlgorithm x = random_algorithm(3, 2, 2, a);
  const QueryAlgorithm y = random_algorithm(3, 2, 2, b);
  for (int k = 0; k <= 2; ++k) CHECK(x.unitaries()[k].matrix() == y.unitaries()[k].matrix());
}
