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

// Progress measures: Euclidean distance and the quantum angle
//
//   angle(psi, psi') = arccos( |<psi|psi'>| / (||psi|| ||psi'||) ),
//
// together with the closed forms for how far a single oracle call can move a
// state under each measure.

#include "qbl/hilbert.hpp"
#include "qbl/query_model.hpp"

namespace qbl {

/// A quantum angle in radians, always in [0, pi/2].
class AngleRadians {
 public:
  explicit AngleRadians(double radians);
  double value() const { return radians_; }
  operator double() const { return radians_; }

 private:
  double radians_;
};

/// arccos with its argument clamped to [-1, 1].
double safe_acos(double x);
/// arcsin with its argument clamped to [-1, 1].
double safe_asin(double x);

AngleRadians quantum_angle(const StateVector& a, const StateVector& b);

double euclidean_distance(const StateVector& a, const StateVector& b);

/// 2 ||Pi_y v||, which equals ||O_y v - v||.
double oracle_displacement_distance(const StateVector& v, int y);

/// arccos|cos 2 theta| with sin theta = ||Pi_y v|| / ||v||, which equals
/// angle(O_y v, v).
AngleRadians oracle_displacement_angle(const StateVector& v, int y);

/// (1/N) sum_y ||Psi^T - Psi_y^T||
double average_final_distance(const QueryAlgorithm& a);

/// (1/N) sum_y angle(Psi^T, Psi_y^T)
double average_final_angle(const QueryAlgorithm& a);

}  // namespace qbl
