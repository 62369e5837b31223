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

#include "oracles.hpp"
#include "qbl/bounds.hpp"
#include "qbl/common.hpp"
#include "qbl/grover.hpp"
#include "qbl/metrics.hpp"
#include "qbl/verify.hpp"

using namespace qbl;

TEST_CASE("simulated success matches the closed form") {
  for (int n = 2; n <= 64; ++n) {
    const double theta = oracle::theta_ref(n);
    for (int t = 0; (2 * t + 1) * theta <= oracle::kPiRef / 2; ++t) {
      const QueryAlgorithm g = build_grover(n, t);
      CAPTURE(n);
      CAPTURE(t);
      CHECK(std::abs(min_success(g) - oracle::grover_success_ref(n, t)) < 1e-9);
      CHECK(std::abs(grover_success_closed_form(n, t) - oracle::grover_success_ref(n, t)) < 1e-12);
    }
  }
}

TEST_CASE("closed form keeps holding past the optimal iteration count") {
  for (int n : {2, 3, 5, 9}) {
    for (int t = 0; t <= 6; ++t) {
      CHECK(std::abs(min_success(build_grover(n, t)) - grover_success_closed_form(n, t)) < 1e-9);
    }
  }
}

TEST_CASE("Grover treats every marked index alike") {
  for (int n : {2, 7, 16}) {
    const QueryAlgorithm g = build_grover(n, 2);
    const double p1 = success_probability(g, 1);
    for (int y = 2; y <= n; ++y) CHECK(std::abs(success_probability(g, y) - p1) < 1e-12);
  }
}

TEST_CASE("Grover unitaries match a dense simulation") {
  const QueryAlgorithm g = build_grover(6, 2);
  for (int y = 1; y <= 6; ++y) {
    const Eigen::VectorXd psi_ref = oracle::dense_run(g, y).cwiseAbs2();
    CHECK(std::abs(psi_ref[y] - success_probability(g, y)) < 1e-12);
  }
}

TEST_CASE("Grover(4, 1) is exact") {
  const QueryAlgorithm g = build_grover(4, 1);
  CHECK(std::abs(min_success(g) - 1.0) < 1e-9);
  const LemmaReport r = check_theorem(g, TheoremVersion::angle);
  CHECK(r.passed);
  CHECK(std::abs(r.slack) < 1e-9);
}

TEST_CASE("Grover meets the angle bound with equality") {
  for (int n = 2; n <= 40; ++n) {
    const double theta = oracle::theta_ref(n);
    for (int t = 0; (2 * t + 1) * theta <= oracle::kPiRef / 2; ++t) {
      const LemmaReport r = check_theorem(build_grover(n, t), TheoremVersion::angle);
      CAPTURE(n);
      CAPTURE(t);
      CHECK(r.passed);
      CHECK(std::abs(r.slack) < 1e-6);
    }
  }
}

TEST_CASE("zero iterations prepare the uniform superposition") {
  const QueryAlgorithm g = build_grover(5, 0);
  const StateVector s = run(g, SearchOracle::null(5));
  CHECK(s.block_norm(0) < 1e-12);
  for (int i = 1; i <= 5; ++i) CHECK(std::abs(s.block_norm(i) - std::sqrt(0.2)) < 1e-12);
}

TEST_CASE("exact targets") {
  SUBCASE("plain iterations already reach the target") {
    const ExactGrover e = build_exact_grover(100, 0.5);
    CHECK(e.queries == 4);
    CHECK_FALSE(e.tuned);
    CHECK(e.achieved >= 0.5);
  }
  SUBCASE("N = 4 with certainty needs no tuning") {
    const ExactGrover e = build_exact_grover(4, 1.0);
    CHECK(e.queries == 1);
    CHECK(e.achieved >= 1.0 - 1e-9);
  }
  SUBCASE("overshooting iterations are tuned down to certainty") {
    const ExactGrover e = build_exact_grover(2, 1.0);
    CHECK(e.queries == 1);
    CHECK(e.tuned);
    CHECK(e.achieved >= 1.0 - 1e-6);
    CHECK(std::abs(e.mixing_angle - oracle::kPiRef / 4) < 1e-4);
  }
  SUBCASE("large N reaching certainty") {
    const ExactGrover e = build_exact_grover(100, 1.0);
    CHECK(e.queries == min_queries(100, 1.0));
    CHECK(e.achieved >= 1.0 - 1e-6);
  }
  SUBCASE("tuned success is reached at the minimum query count") {
    for (int n : {3, 5, 10, 30}) {
      for (double p : {0.6, 0.9, 0.99}) {
        const ExactGrover e = build_exact_grover(n, p);
        CAPTURE(n);
        CAPTURE(p);
        CHECK(e.queries == min_queries(n, p));
        CHECK(e.achieved >= p - 1e-6);
        CHECK(std::abs(min_success(e.algorithm) - e.achieved) < 1e-12);
      }
    }
  }
}

TEST_CASE("mixed start with a right angle is plain Grover") {
  for (int t = 0; t <= 3; ++t) {
    CHECK(std::abs(min_success(build_mixed_grover(7, t, oracle::kPiRef / 2)) -
                   grover_success_closed_form(7, t)) < 1e-12);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_grover(1, 1), InvalidInput);
  CHECK_THROWS_AS(build_grover(4, -1), InvalidInput);
  CHECK_THROWS_AS(build_grover(GroverParams{4, 2, 1.0}), InvalidInput);
  CHECK_NOTHROW(build_grover(GroverParams{4, 1, 1.0}));
  CHECK_THROWS_AS(build_exact_grover(1, 0.5), InvalidInput);
  CHECK_THROWS_AS(build_exact_grover(4, 0.0), InvalidInput);
}
