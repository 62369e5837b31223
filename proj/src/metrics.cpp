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

#include "qbl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qbl {

namespace {

void require_block(const StateVector& v, int y) {
  if (y < 1 || y > v.n()) {
    throw InvalidInput("index " + std::to_string(y) + " outside [1, " + std::to_string(v.n()) +
                       "]");
  }
}

}  // namespace

AngleRadians::AngleRadians(double radians) : radians_(radians) {
  if (!(radians >= 0.0 && radians <= kPi / 2)) {
    throw InvalidInput("quantum angle " + std::to_string(radians) + " outside [0, pi/2]");
  }
}

double safe_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }
double safe_asin(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }

AngleRadians quantum_angle(const StateVector& a, const StateVector& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw InvalidInput("quantum angle of a zero vector");
  // arccos(|<a|b>| / |a||b|) evaluated through the chord between the
  // phase-aligned unit vectors; arccos itself loses half the digits near 0.
  const Complex overlap = inner_product(a, b);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  const double chord =
      (a.amplitudes() / na - std::conj(phase) * b.amplitudes() / nb).norm();
  return AngleRadians(std::min(2.0 * safe_asin(0.5 * chord), kPi / 2));
}

double euclidean_distance(const StateVector& a, const StateVector& b) {
  if (a.n() != b.n() || a.w() != b.w()) throw InvalidInput("state dimension mismatch");
  return (a.amplitudes() - b.amplitudes()).norm();
}

double oracle_displacement_distance(const StateVector& v, int y) {
  require_block(v, y);
  return 2.0 * v.block_norm(y);
}

AngleRadians oracle_displacement_angle(const StateVector& v, int y) {
  require_block(v, y);
  const double nv = v.norm();
  if (nv == 0.0) throw InvalidInput("oracle displacement of a zero vector");
  // arccos|cos 2t| = min(2t, pi - 2t) with t the angle between v and the
  // complement of block y
  const double inside = v.block_norm(y);
  double outside_sq = 0.0;
  for (int b = 0; b <= v.n(); ++b) {
    if (b != y) outside_sq += v.block(b).squaredNorm();
  }
  const double outside = std::sqrt(outside_sq);
  const double theta = std::atan2(inside, outside);
  return AngleRadians(std::min(2.0 * theta, kPi - 2.0 * theta));
}

double average_final_distance(const QueryAlgorithm& a) {
  const StateVector null_final = run(a, SearchOracle::null(a.n()));
  double sum = 0.0;
  for (int y = 1; y <= a.n(); ++y) {
    sum += euclidean_distance(null_final, run(a, SearchOracle::marked(a.n(), y)));
  }
  return sum / a.n();
}

double average_final_angle(const QueryAlgorithm& a) {
  const StateVector null_final = run(a, SearchOracle::null(a.n()));
  double sum = 0.0;
  for (int y = 1; y <= a.n(); ++y) {
    sum += quantum_angle(null_final, run(a, SearchOracle::marked(a.n(), y))).value();
  }
  return sum / a.n();
}

}  // namespace qbl
