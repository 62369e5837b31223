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

#include "qbl/query_model.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace qbl {

namespace {

void require_index(int n, int y) {
  if (y < 1 || y > n) {
    throw InvalidInput("marked index " + std::to_string(y) + " outside [1, " +
                       std::to_string(n) + "]");
  }
}

// Runs the algorithm with oracle `marked` on queries 1..prefix and the null
// oracle afterwards, stopping after U_stop. marked == 0 means null throughout.
Eigen::VectorXcd execute(const QueryAlgorithm& a, int marked, int prefix, int stop) {
  const auto w = static_cast<Eigen::Index>(a.w());
  Eigen::VectorXcd v = a.unitaries()[0].matrix().col(0);
  for (int k = 1; k <= stop; ++k) {
    if (marked != 0 && k <= prefix) v.segment(marked * w, w) *= -1.0;
    v = a.unitaries()[k].matrix() * v;
  }
  return v;
}

}  // namespace

SearchOracle SearchOracle::null(int n) {
  if (n < 1) throw InvalidInput("oracle range N must be positive");
  return SearchOracle(n, std::nullopt);
}

SearchOracle SearchOracle::marked(int n, int y) {
  if (n < 1) throw InvalidInput("oracle range N must be positive");
  require_index(n, y);
  return SearchOracle(n, y);
}

StateVector apply_oracle(const SearchOracle& oracle, const StateVector& v) {
  if (oracle.n() != v.n()) {
    throw InvalidInput("oracle over N=" + std::to_string(oracle.n()) +
                       " applied to state with N=" + std::to_string(v.n()));
  }
  if (oracle.is_null()) return v;
  Eigen::VectorXcd out = v.amplitudes();
  out.segment(v.index(*oracle.marked_index(), 0), v.w()) *= -1.0;
  return StateVector(v.n(), v.w(), std::move(out));
}

Measurement::Measurement(int n, int w, std::vector<BlockProjector> outcomes,
                         std::optional<BlockProjector> abstain)
    : n_(n), w_(w), outcomes_(std::move(outcomes)), abstain_(std::move(abstain)) {
  if (static_cast<int>(outcomes_.size()) != n) {
    throw InvalidInput("measurement needs exactly N=" + std::to_string(n) +
                       " outcome projectors, got " + std::to_string(outcomes_.size()));
  }
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  auto claim = [&](const BlockProjector& p, int id) {
    if (p.n() != n || p.w() != w) throw InvalidInput("measurement projector shape mismatch");
    for (int b : p.blocks()) {
      if (owner[b] != -1) {
        throw InvalidInput("measurement projectors overlap on block " + std::to_string(b));
      }
      owner[b] = id;
    }
  };
  for (int y = 1; y <= n; ++y) claim(outcomes_[y - 1], y);
  if (abstain_) claim(*abstain_, 0);
  for (int b = 0; b <= n; ++b) {
    if (owner[b] == -1) {
      throw InvalidInput("measurement does not cover block " + std::to_string(b));
    }
  }
}

Measurement Measurement::canonical(int n, int w) {
  std::vector<BlockProjector> outcomes;
  outcomes.reserve(n);
  for (int y = 1; y <= n; ++y) outcomes.push_back(BlockProjector::single(n, w, y));
  return Measurement(n, w, std::move(outcomes), BlockProjector::single(n, w, 0));
}

const BlockProjector& Measurement::outcome(int y) const {
  require_index(n_, y);
  return outcomes_[y - 1];
}

QueryAlgorithm::QueryAlgorithm(int n, int w, std::vector<UnitaryMatrix> unitaries,
                               Measurement measurement)
    : n_(n), w_(w), unitaries_(std::move(unitaries)), measurement_(std::move(measurement)) {
  if (unitaries_.empty()) throw InvalidInput("algorithm needs at least U_0");
  for (std::size_t t = 0; t < unitaries_.size(); ++t) {
    if (unitaries_[t].dim() != dim()) {
      throw InvalidInput("U_" + std::to_string(t) + " has dim " +
                         std::to_string(unitaries_[t].dim()) + ", expected (N+1)*W = " +
                         std::to_string(dim()));
    }
  }
  if (measurement_.n() != n || measurement_.w() != w) {
    throw InvalidInput("measurement shape does not match algorithm shape");
  }
}

QueryAlgorithm::QueryAlgorithm(int n, int w, std::vector<UnitaryMatrix> unitaries)
    : QueryAlgorithm(n, w, std::move(unitaries), Measurement::canonical(n, w)) {}

StateVector run(const QueryAlgorithm& a, const SearchOracle& oracle) {
  if (oracle.n() != a.n()) throw InvalidInput("oracle range does not match algorithm");
  const int marked = oracle.marked_index().value_or(0);
  return StateVector(a.n(), a.w(), execute(a, marked, a.queries(), a.queries()));
}

StateVector hybrid_run(const QueryAlgorithm& a, const HybridSpec& spec) {
  require_index(a.n(), spec.y);
  if (spec.prefix < 0 || spec.prefix > a.queries()) {
    throw InvalidInput("hybrid prefix " + std::to_string(spec.prefix) + " outside [0, " +
                       std::to_string(a.queries()) + "]");
  }
  return StateVector(a.n(), a.w(), execute(a, spec.y, spec.prefix, a.queries()));
}

StateVector null_state_after(const QueryAlgorithm& a, int t) {
  if (t < 0 || t > a.queries()) {
    throw InvalidInput("step " + std::to_string(t) + " outside [0, " +
                       std::to_string(a.queries()) + "]");
  }
  return StateVector(a.n(), a.w(), execute(a, 0, 0, t));
}

std::vector<double> outcome_distribution(const QueryAlgorithm& a, const SearchOracle& oracle) {
  const StateVector psi = run(a, oracle);
  const Measurement& m = a.measurement();
  std::vector<double> probs;
  probs.reserve(a.n() + 1);
  auto mass = [&](const BlockProjector& p) {
    double s = 0.0;
    for (int b : p.blocks()) s += psi.block(b).squaredNorm();
    return s;
  };
  for (const auto& p : m.outcomes()) probs.push_back(mass(p));
  probs.push_back(m.abstain() ? mass(*m.abstain()) : 0.0);
  return probs;
}

double success_probability(const QueryAlgorithm& a, int y) {
  require_index(a.n(), y);
  const StateVector psi = run(a, SearchOracle::marked(a.n(), y));
  double s = 0.0;
  for (int b : a.measurement().outcome(y).blocks()) s += psi.block(b).squaredNorm();
  return std::clamp(s, 0.0, 1.0);
}

double min_success(const QueryAlgorithm& a) {
  double best = 1.0;
  for (int y = 1; y <= a.n(); ++y) best = std::min(best, success_probability(a, y));
  return best;
}

SuccessSplit success_split(const QueryAlgorithm& a, int y) {
  require_index(a.n(), y);
  const StateVector psi = run(a, SearchOracle::marked(a.n(), y));
  const BlockProjector& hit = a.measurement().outcome(y);
  SuccessSplit split;
  for (int b = 0; b <= a.n(); ++b) {
    (hit.contains(b) ? split.success : split.failure) += psi.block(b).squaredNorm();
  }
  split.success = std::clamp(split.success, 0.0, 1.0);
  split.failure = std::clamp(split.failure, 0.0, 1.0);
  return split;
}

SuccessSplit worst_case_split(const QueryAlgorithm& a) {
  SuccessSplit worst = success_split(a, 1);
  for (int y = 2; y <= a.n(); ++y) {
    const SuccessSplit s = success_split(a, y);
    if (s.success < worst.success) worst = s;
  }
  return worst;
}

}  // namespace qbl
