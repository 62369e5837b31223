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

// Closed-form query lower bounds for unordered search, with the classical
// baselines for comparison. Theta = arcsin(1/sqrt(N)) is the most a single
// query can rotate the average state; Theta_p = arcsin(sqrt(p)) is how far a
// p-successful final state has to be rotated.

#include <utility>

namespace qbl {

/// arcsin(1/sqrt(n)), evaluated as arcsin(sqrt(1/n)) so that theta_final(1/n)
/// reproduces it bit for bit.
double search_angle(int n);
double target_angle(double p);  // arcsin(sqrt(p))
/// arcsin(sqrt(p)) evaluated as atan2(sqrt(p), sqrt(q)) from a success mass p
/// and a separately measured failure mass q = 1 - p.
double target_angle(double p, double q);

/// (sqrt(N) / (2 sqrt 2)) (1 + sqrt(p) - sqrt(1-p) - 2/sqrt(N)); may be negative.
double distance_bound(int n, double p);

/// max(0, (Theta_p - Theta) / (2 Theta)).
double angle_bound(int n, double p);
/// Same formula without the clamp at zero.
double angle_bound_raw(int n, double p);

/// Smallest integer T >= angle_bound(n, p).
int min_queries(int n, double p);

double lemma_cs_max(int n);        // sqrt(N)
double lemma_cs_angle_max(int n);  // N arcsin(1/sqrt(N))

struct MeasurePair {
  double distance;
  double angle;
};

/// Upper bounds on the average final distance and angle after t queries:
/// (2t/sqrt(N), 2t Theta).
MeasurePair lemma_growth_bounds(int n, int t);

/// Lower bounds on the average final distance and angle of any algorithm that
/// succeeds with probability p on every input.
MeasurePair lemma_final_bounds(int n, double p);

struct ClassicalQueries {
  int deterministic;   // N - 1
  int probabilistic;   // max(0, ceil(pN - 1))
};

ClassicalQueries classical_queries(int n, double p);

struct BoundReport {
  int n = 0;
  double p = 0.0;
  double theta = 0.0;
  double theta_final = 0.0;
  double distance_bound = 0.0;          // raw formula value
  double distance_bound_clamped = 0.0;  // max(0, distance_bound)
  double angle_bound = 0.0;             // clamped at zero
  double angle_bound_raw = 0.0;
  int min_queries = 0;
  int classical_deterministic = 0;
  int classical_probabilistic = 0;
};

BoundReport bound_report(int n, double p);

namespace detail {
// Unchecked evaluations for callers that measured a success mass p and a
// failure mass q = 1 - p from a simulation (p = 0 included).
double distance_bound_formula(int n, double p, double q);
double angle_bound_formula(int n, double p, double q);
MeasurePair final_bounds_formula(int n, double p, double q);
}  // namespace detail

}  // namespace qbl
