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

#include "qbl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qbl/common.hpp"

namespace qbl {

namespace {

void require_n(int n) {
  if (n < 1) throw InvalidInput("N must be at least 1, got " + std::to_string(n));
}

void require_p(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw InvalidInput("success probability must lie in (0, 1], got " + std::to_string(p));
  }
}

int guarded_ceil(double x) {
  if (x <= 0.0) return 0;
  return static_cast<int>(std::ceil(x - kCeilGuard));
}

}  // namespace

double search_angle(int n) {
  require_n(n);
  return std::asin(std::sqrt(1.0 / n));
}

double target_angle(double p) { return std::asin(std::sqrt(std::clamp(p, 0.0, 1.0))); }

double target_angle(double p, double q) {
  return std::atan2(std::sqrt(std::max(p, 0.0)), std::sqrt(std::max(q, 0.0)));
}

namespace detail {

double distance_bound_formula(int n, double p, double q) {
  const double rn = std::sqrt(static_cast<double>(n));
  return rn / (2.0 * std::sqrt(2.0)) * (1.0 + std::sqrt(p) - std::sqrt(q) - 2.0 / rn);
}

double angle_bound_formula(int n, double p, double q) {
  const double theta = search_angle(n);
  return (target_angle(p, q) - theta) / (2.0 * theta);
}

MeasurePair final_bounds_formula(int n, double p, double q) {
  const double rn = std::sqrt(static_cast<double>(n));
  return {(1.0 + std::sqrt(p) - std::sqrt(q) - 2.0 / rn) / std::sqrt(2.0),
          target_angle(p, q) - search_angle(n)};
}

}  // namespace detail

double distance_bound(int n, double p) {
  require_n(n);
  require_p(p);
  return detail::distance_bound_formula(n, p, 1.0 - p);
}

double angle_bound_raw(int n, double p) {
  require_n(n);
  require_p(p);
  const double theta = search_angle(n);
  return (target_angle(p) - theta) / (2.0 * theta);
}

double angle_bound(int n, double p) {
  const double raw = angle_bound_raw(n, p);
  if (p <= 1.0 / n) return 0.0;
  return std::max(0.0, raw);
}

int min_queries(int n, double p) { return guarded_ceil(angle_bound(n, p)); }

double lemma_cs_max(int n) {
  require_n(n);
  return std::sqrt(static_cast<double>(n));
}

double lemma_cs_angle_max(int n) { return n * search_angle(n); }

MeasurePair lemma_growth_bounds(int n, int t) {
  require_n(n);
  if (t < 0) throw InvalidInput("query count must be non-negative");
  return {2.0 * t / std::sqrt(static_cast<double>(n)), 2.0 * t * search_angle(n)};
}

MeasurePair lemma_final_bounds(int n, double p) {
  require_n(n);
  require_p(p);
  const double rn = std::sqrt(static_cast<double>(n));
  return {(1.0 + std::sqrt(p) - std::sqrt(1.0 - p) - 2.0 / rn) / std::sqrt(2.0),
          target_angle(p) - search_angle(n)};
}

ClassicalQueries classical_queries(int n, double p) {
  require_n(n);
  require_p(p);
  return {n - 1, guarded_ceil(p * n - 1.0)};
}

BoundReport bound_report(int n, double p) {
  BoundReport r;
  r.n = n;
  r.p = p;
  r.theta = search_angle(n);
  r.theta_final = target_angle(p);
  r.distance_bound = distance_bound(n, p);
  r.distance_bound_clamped = std::max(0.0, r.distance_bound);
  r.angle_bound = angle_bound(n, p);
  r.angle_bound_raw = angle_bound_raw(n, p);
  r.min_queries = min_queries(n, p);
  const ClassicalQueries c = classical_queries(n, p);
  r.classical_deterministic = c.deterministic;
  r.classical_probabilistic = c.probabilistic;
  return r;
}

}  // namespace qbl
