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

// Query algorithms in the phase-oracle model:
//
//   Psi_x^T = U_T O_x U_{T-1} ... U_1 O_x U_0 |0;0>
//
// followed by a von Neumann measurement made of block projectors.

#include <optional>
#include <vector>

#include "qbl/hilbert.hpp"

namespace qbl {

/// Either a marked index y in [1, N] or the null (all-zero) oracle.
class SearchOracle {
 public:
  static SearchOracle null(int n);
  static SearchOracle marked(int n, int y);

  int n() const { return n_; }
  bool is_null() const { return !marked_.has_value(); }
  std::optional<int> marked_index() const { return marked_; }

 private:
  SearchOracle(int n, std::optional<int> marked) : n_(n), marked_(marked) {}
  int n_;
  std::optional<int> marked_;
};

/// Negates block `marked` and leaves everything else, including block 0,
/// untouched. The null oracle is the identity.
StateVector apply_oracle(const SearchOracle& oracle, const StateVector& v);

/// Final measurement: N disjoint outcome projectors Pi_1..Pi_N plus an
/// optional abstain projector. Together they cover every block 0..N.
class Measurement {
 public:
  Measurement(int n, int w, std::vector<BlockProjector> outcomes,
              std::optional<BlockProjector> abstain);

  /// Pi_y = block y, abstain = block 0.
  static Measurement canonical(int n, int w);

  int n() const { return n_; }
  int w() const { return w_; }
  const BlockProjector& outcome(int y) const;  // y in [1, N]
  const std::vector<BlockProjector>& outcomes() const { return outcomes_; }
  const std::optional<BlockProjector>& abstain() const { return abstain_; }

 private:
  int n_;
  int w_;
  std::vector<BlockProjector> outcomes_;
  std::optional<BlockProjector> abstain_;
};

class QueryAlgorithm {
 public:
  QueryAlgorithm(int n, int w, std::vector<UnitaryMatrix> unitaries, Measurement measurement);
  QueryAlgorithm(int n, int w, std::vector<UnitaryMatrix> unitaries);  // canonical measurement

  int n() const { return n_; }
  int w() const { return w_; }
  int queries() const { return static_cast<int>(unitaries_.size()) - 1; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(n_ + 1) * w_; }

  const std::vector<UnitaryMatrix>& unitaries() const { return unitaries_; }
  const Measurement& measurement() const { return measurement_; }

  /// |0;0>, the oracle-independent start state.
  StateVector start_state() const { return StateVector::basis(n_, w_, 0, 0); }

 private:
  int n_;
  int w_;
  std::vector<UnitaryMatrix> unitaries_;
  Measurement measurement_;
};

/// Oracle y answers the first `prefix` queries; the null oracle answers the rest.
struct HybridSpec {
  int y;
  int prefix;
};

StateVector run(const QueryAlgorithm& a, const SearchOracle& oracle);

StateVector hybrid_run(const QueryAlgorithm& a, const HybridSpec& spec);
inline StateVector hybrid_run(const QueryAlgorithm& a, int y, int prefix) {
  return hybrid_run(a, HybridSpec{y, prefix});
}

/// State after U_t when every query is answered by the null oracle.
StateVector null_state_after(const QueryAlgorithm& a, int t);

/// Probabilities of outcomes 1..N (indices 0..N-1) followed by the abstain
/// mass, for the final state under `oracle`.
std::vector<double> outcome_distribution(const QueryAlgorithm& a, const SearchOracle& oracle);

/// ||Pi_y Psi_y^T||^2, clamped to [0, 1]. Abstain mass never counts.
double success_probability(const QueryAlgorithm& a, int y);

double min_success(const QueryAlgorithm& a);

/// Success and failure mass of one final state, each summed directly from
/// the amplitudes. Near certainty `failure` keeps full relative precision,
/// which 1 - success cannot.
struct SuccessSplit {
  double success = 0.0;  // ||Pi_y Psi_y^T||^2
  double failure = 0.0;  // ||(1 - Pi_y) Psi_y^T||^2
};

SuccessSplit success_split(const QueryAlgorithm& a, int y);
/// Split at the oracle with the lowest success probability.
SuccessSplit worst_case_split(const QueryAlgorithm& a);

}  // namespace qbl
