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

using namespace qbl;

namespace {

// Reference values evaluated at 30 digits with an arbitrary-precision package.
constexpr double kDistance100 = 6.363961030678928;   // distance_bound(100, 1)
constexpr double kDistance4 = 0.7071067811865476;    // distance_bound(4, 1)
constexpr double kAngle100Half = 3.420427192243881;  // angle_bound(100, 0.5)
constexpr double kGrowth100x7 = 1.402343896261837;   // 14 arcsin(1/10)
constexpr double kFinal100 = 1.148878351236695;      // arcsin(sqrt .9) - arcsin(.1)
constexpr double kCsAngle4 = 2.094395102393195;      // 4 arcsin(1/2) = 2 pi / 3

}  // namespace

TEST_CASE("frozen reference values") {
  CHECK(distance_bound(100, 1.0) == doctest::Approx(kDistance100).epsilon(1e-14));
  CHECK(distance_bound(4, 1.0) == doctest::Approx(kDistance4).epsilon(1e-14));
  CHECK(angle_bound(100, 0.5) == doctest::Approx(kAngle100Half).epsilon(1e-14));
  CHECK(lemma_growth_bounds(100, 7).angle == doctest::Approx(kGrowth100x7).epsilon(1e-14));
  CHECK(lemma_growth_bounds(100, 7).distance == doctest::Approx(1.4).epsilon(1e-14));
  CHECK(lemma_final_bounds(100, 0.9).angle == doctest::Approx(kFinal100).epsilon(1e-14));
  CHECK(lemma_cs_angle_max(4) == doctest::Approx(kCsAngle4).epsilon(1e-14));
  CHECK(lemma_cs_max(9) == 3.0);
}

TEST_CASE("printed distance formula evaluated independently") {
  for (int n : {2, 5, 17, 100, 1000}) {
    for (double p : {0.1, 0.5, 0.9, 1.0}) {
      const double rn = std::sqrt(static_cast<double>(n));
      const double ref = rn / std::sqrt(8.0) * (1 + std::sqrt(p) - std::sqrt(1 - p) - 2 / rn);
      CHECK(std::abs(distance_bound(n, p) - ref) < 1e-12);
    }
  }
}

TEST_CASE("N = 4 with certainty needs exactly one query") {
  CHECK(std::abs(angle_bound(4, 1.0) - 1.0) < 1e-12);
  CHECK(min_queries(4, 1.0) == 1);
  CHECK(search_angle(4) == doctest::Approx(oracle::kPiRef / 6).epsilon(1e-15));
}

TEST_CASE("angle bound is zero up to the guessing probability") {
  for (int n = 1; n <= 64; ++n) {
    CHECK(angle_bound(n, 1.0 / n) == 0.0);
    CHECK(min_queries(n, 1.0 / n) == 0);
    CHECK(angle_bound(n, 0.5 / n) == 0.0);
    CHECK(angle_bound_raw(n, 0.5 / n) < 0.0);
  }
  CHECK(min_queries(10, 0.1) == 0);
}

TEST_CASE("Grover success probabilities are met with equality") {
  for (int n = 2; n <= 64; ++n) {
    const double theta = oracle::theta_ref(n);
    for (int t = 0; (2 * t + 1) * theta <= oracle::kPiRef / 2; ++t) {
      const double p = oracle::grover_success_ref(n, t);
      CAPTURE(n);
      CAPTURE(t);
      CHECK(std::abs(angle_bound_raw(n, p) - t) < 1e-6);
      CHECK(min_queries(n, p) == t);
    }
  }
  // the exact value computed at high precision is 7, not a rounded 6.93
  CHECK(std::abs(angle_bound(100, 0.995344400357599) - 7.0) < 1e-6);
}

TEST_CASE("bounds increase with p") {
  for (int n : {2, 3, 8, 50, 1000}) {
    double prev_d = -1e300, prev_a = -1e300;
    for (int k = 1; k <= 200; ++k) {
      const double p = k / 200.0;
      const double d = distance_bound(n, p);
      const double a = angle_bound_raw(n, p);
      CHECK(d >= prev_d);
      CHECK(a >= prev_a);
      prev_d = d;
      prev_a = a;
    }
  }
}

TEST_CASE("angle bound dominates the distance bound") {
  for (int n = 2; n <= 200; n += 3) {
    for (int k = 1; k <= 20; ++k) {
      const double p = k / 20.0;
      CHECK(angle_bound_raw(n, p) >= distance_bound(n, p) - 1e-12);
    }
  }
}

TEST_CASE("two queries are needed beyond the one-query Grover success") {
  for (int n = 5; n <= 200; ++n) {
    const double one_query = oracle::grover_success_ref(n, 1);
    const double p = std::min(1.0, one_query + 1e-6);
    CAPTURE(n);
    CHECK(min_queries(n, p) >= 2);
  }
}

TEST_CASE("min_queries has a guard against round-off just above an integer") {
  // A p built from the Grover(4, 1) formula can land 1 ulp away from 1.
  CHECK(min_queries(4, std::nextafter(1.0, 0.0)) == 1);
  CHECK(min_queries(100, 0.995344400357599) == 7);
}

TEST_CASE("classical query counts") {
  const ClassicalQueries c = classical_queries(100, 0.5);
  CHECK(c.deterministic == 99);
  CHECK(c.probabilistic == 49);
  CHECK(classical_queries(100, 1.0).probabilistic == 99);
  CHECK(classical_queries(100, 0.01).probabilistic == 0);
  CHECK(classical_queries(10, 0.3).probabilistic == 2);
}

TEST_CASE("bound report") {
  const BoundReport r = bound_report(100, 0.5);
  CHECK(r.n == 100);
  CHECK(r.theta == doctest::Approx(std::asin(0.1)));
  CHECK(r.theta_final == doctest::Approx(oracle::kPiRef / 4));
  CHECK(r.min_queries == 4);
  CHECK(r.distance_bound_clamped >= 0.0);
  const BoundReport low = bound_report(100, 0.02);
  CHECK(low.distance_bound < 0.0);
  CHECK(low.distance_bound_clamped == 0.0);
}

TEST_CASE("measured success and failure masses give a well-conditioned angle") {
  // 1 - p cancels for p near 1; the separately measured failure mass does not.
  const double q = 1e-20;
  CHECK(target_angle(1.0, q) == doctest::Approx(oracle::kPiRef / 2 - 1e-10).epsilon(1e-15));
  CHECK(target_angle(0.5, 0.5) == doctest::Approx(oracle::kPiRef / 4).epsilon(1e-15));
  CHECK(detail::angle_bound_formula(4, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(detail::angle_bound_formula(4, 0.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(distance_bound(0, 0.5), InvalidInput);
  CHECK_THROWS_AS(angle_bound(4, 0.0), InvalidInput);
  CHECK_THROWS_AS(angle_bound(4, 1.5), InvalidInput);
  CHECK_THROWS_AS(min_queries(4, std::nan("")), InvalidInput);
  CHECK_THROWS_AS(lemma_growth_bounds(4, -1), InvalidInput);
  CHECK_THROWS_AS(classical_queries(-3, 0.5), InvalidInput);
}
