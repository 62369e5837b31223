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
#include "qbl/optimize.hpp"

using namespace qbl;

TEST_CASE("constrained sums reach their closed-form maxima") {
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const OptimizationResult d = maximize_cs(ProblemKind::cs_distance, n, kDefaultCsBudget,
                                             kDefaultCsRestarts, 1);
    CHECK(std::abs(d.best_value - std::sqrt(static_cast<double>(n))) < 1e-6);
    REQUIRE(d.argmax.size() == static_cast<std::size_t>(n));
    for (double a : d.argmax) CHECK(std::abs(a - 1.0 / std::sqrt(n)) < 1e-4);

    const OptimizationResult g = maximize_cs(ProblemKind::cs_angle, n, kDefaultCsBudget,
                                             kDefaultCsRestarts, 1);
    const double ref = n * std::atan(1.0 / std::sqrt(std::max(n - 1.0, 0.0)));
    CHECK(std::abs(g.best_value - ref) < 1e-6);
    for (double t : g.argmax) CHECK(std::abs(t - ref / n) < 1e-4);
    CHECK(g.converged);
  }
}

TEST_CASE("constrained argmax is feasible") {
  const OptimizationResult d = maximize_cs(ProblemKind::cs_distance, 6, 5000, 2, 9);
  double sq = 0.0;
  for (double a : d.argmax) {
    CHECK(a >= 0.0);
    sq += a * a;
  }
  CHECK(sq <= 1.0 + 1e-12);
  const OptimizationResult g = maximize_cs(ProblemKind::cs_angle, 6, 5000, 2, 9);
  double s2 = 0.0;
  for (double t : g.argmax) {
    CHECK(t >= 0.0);
    CHECK(t <= oracle::kPiRef / 2);
    s2 += std::sin(t) * std::sin(t);
  }
  CHECK(s2 <= 1.0 + 1e-12);
}

TEST_CASE("Hermitian parameterization") {
  RandomSource rng(3);
  const Eigen::Index d = 4;
  std::vector<double> params(d * d);
  for (double& x : params) x = rng.normal();
  const Eigen::MatrixXcd h = hermitian_from_parameters(d, params);
  CHECK((h - h.adjoint()).norm() < 1e-15);
  CHECK(h(0, 0).real() == params[0]);
  CHECK(h(0, 1) == Complex(params[d], params[d + 1]));
  const Eigen::MatrixXcd u = exp_i_hermitian(h);
  CHECK(UnitaryMatrix::unitarity_defect(u) < 1e-12);
  CHECK_THROWS_AS(hermitian_from_parameters(3, params), InvalidInput);
}

TEST_CASE("exp of i times zero is the identity and commutes with scaling") {
  const Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(3, 3);
  CHECK((exp_i_hermitian(z) - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-15);
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
  diag(0, 0) = oracle::kPiRef;
  diag(1, 1) = 0.5;
  const Eigen::MatrixXcd e = exp_i_hermitian(diag);
  CHECK(std::abs(e(0, 0) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(e(1, 1) - std::polar(1.0, 0.5)) < 1e-15);
}

TEST_CASE("parameters round-trip through an algorithm") {
  RandomSource rng(17);
  std::vector<double> params(2 * 9);
  for (double& x : params) x = 0.5 * rng.normal();
  const QueryAlgorithm a = algorithm_from_parameters(2, 1, 1, params);
  const std::vector<double> back = parameters_from_algorithm(a);
  const QueryAlgorithm b = algorithm_from_parameters(2, 1, 1, back);
  for (int k = 0; k <= 1; ++k) {
    CHECK((a.unitaries()[k].matrix() - b.unitaries()[k].matrix()).norm() < 1e-10);
  }
}

TEST_CASE("best success at small sizes") {
  RandomSource rng(42);
  SUBCASE("no queries means guessing") {
    const OptimizationResult r = best_success(4, 1, 0, 4000, 3, rng);
    CHECK(std::abs(r.best_value - 0.25) < 1e-3);
  }
  SUBCASE("N = 2 with one query is certain") {
    const OptimizationResult r = best_success(2, 1, 1, 4000, 3, rng);
    CHECK(r.best_value > 1.0 - 1e-3);
  }
  SUBCASE("N = 4 with one query is certain") {
    const OptimizationResult r = best_success(4, 1, 1, kDefaultSearchBudget, 3, rng);
    CHECK(r.best_value > 1.0 - 1e-3);
    const QueryAlgorithm a = algorithm_from_parameters(4, 1, 1, r.argmax);
    CHECK(std::abs(min_success(a) - r.best_value) < 1e-9);
  }
  SUBCASE("never beats the lower bound") {
    for (int n : {3, 5, 8}) {
      const OptimizationResult r = best_success(n, 1, 1, 3000, 2, rng);
      CHECK(r.best_value <= max_success_allowed(n, 1) + 1e-9);
    }
  }
}

TEST_CASE("best success validation") {
  RandomSource rng(1);
  CHECK_THROWS_AS(best_success(16, 1, 1, 10, 1, rng), InvalidInput);
  CHECK_THROWS_AS(best_success(3, 1, 4, 10, 1, rng), InvalidInput);
  CHECK_THROWS_AS(best_success(0, 1, 1, 10, 1, rng), InvalidInput);
}

TEST_CASE("allowed success is capped at certainty") {
  CHECK(max_success_allowed(4, 1) == doctest::Approx(1.0));
  CHECK(max_success_allowed(3, 1) == 1.0);
  CHECK(max_success_allowed(2, 1) == 1.0);
  CHECK(max_success_allowed(100, 0) == doctest::Approx(0.01));
  CHECK(max_success_allowed(16, 1) == doctest::Approx(oracle::grover_success_ref(16, 1)));
}

TEST_CASE("tightness reports agree") {
  for (auto [n, t] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 1}, {4, 1}}) {
    RandomSource rng(derive_seed(5, static_cast<std::uint64_t>(n * 10 + t)));
    const TightnessReport r = tightness_report(n, 1, t, kDefaultSearchBudget, 3, rng);
    CAPTURE(n);
    CAPTURE(t);
    CHECK(r.agree);
    CHECK(r.within_bound);
    CHECK(std::abs(r.grover_p - r.bound_p) < 1e-9);
  }
}

TEST_CASE("optimize dispatch is deterministic in the seed") {
  OptimizationProblem p;
  p.kind = ProblemKind::best_algorithm;
  p.n = 3;
  p.t = 1;
  p.budget = 1500;
  p.restarts = 2;
  p.seed = 77;
  const OptimizationResult a = optimize(p);
  const OptimizationResult b = optimize(p);
  CHECK(a.best_value == b.best_value);
  CHECK(a.argmax == b.argmax);
  p.kind = ProblemKind::cs_angle;
  p.n = 4;
  CHECK(optimize(p).best_value == doctest::Approx(oracle::kPiRef * 2 / 3).epsilon(1e-6));
}
