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

#include "qbl/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <utility>

namespace qbl {

using json = nlohmann::ordered_json;

namespace {

BlockProjector projector_from_json(int n, int w, const json& blocks) {
  if (!blocks.is_array()) throw InvalidInput("block list must be an array");
  return BlockProjector(n, w, blocks.get<std::vector<int>>());
}

}  // namespace

json algorithm_to_json(const QueryAlgorithm& a) {
  json doc;
  doc["n"] = a.n();
  doc["w"] = a.w();
  json unitaries = json::array();
  for (const auto& u : a.unitaries()) {
    json entries = json::array();
    const Eigen::MatrixXcd& m = u.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        entries.push_back({m(i, j).real(), m(i, j).imag()});
      }
    }
    unitaries.push_back(std::move(entries));
  }
  doc["unitaries"] = std::move(unitaries);
  json outcomes = json::array();
  for (const auto& p : a.measurement().outcomes()) outcomes.push_back(p.blocks());
  doc["measurement"] = std::move(outcomes);
  const auto& abstain = a.measurement().abstain();
  doc["abstain"] = abstain ? json(abstain->blocks()) : json(nullptr);
  return doc;
}

QueryAlgorithm algorithm_from_json(const json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    const int w = doc.at("w").get<int>();
    if (n < 1 || w < 1) throw InvalidInput("algorithm needs n >= 1 and w >= 1");
    const Eigen::Index d = static_cast<Eigen::Index>(n + 1) * w;
    std::vector<UnitaryMatrix> us;
    for (const json& entries : doc.at("unitaries")) {
      if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != d * d) {
        throw InvalidInput("each unitary needs (N+1)W squared entries");
      }
      Eigen::MatrixXcd m(d, d);
      for (Eigen::Index k = 0; k < d * d; ++k) {
        const json& z = entries[static_cast<std::size_t>(k)];
        if (!z.is_array() || z.size() != 2) throw InvalidInput("entries must be [re, im] pairs");
        m(k / d, k % d) = Complex(z[0].get<double>(), z[1].get<double>());
      }
      us.emplace_back(std::move(m));
    }
    std::vector<BlockProjector> outcomes;
    for (const json& blocks : doc.at("measurement")) {
      outcomes.push_back(projector_from_json(n, w, blocks));
    }
    std::optional<BlockProjector> abstain;
    if (doc.contains("abstain") && !doc.at("abstain").is_null()) {
      abstain = projector_from_json(n, w, doc.at("abstain"));
    }
    return QueryAlgorithm(n, w, std::move(us), Measurement(n, w, std::move(outcomes), abstain));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed algorithm document: ") + e.what());
  }
}

void save_algorithm(const QueryAlgorithm& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  out << algorithm_to_json(a).dump() << '\n';
}

QueryAlgorithm load_algorithm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return algorithm_from_json(doc);
}

json to_json(const BoundReport& r) {
  return {{"n", r.n},
          {"p", r.p},
          {"theta", r.theta},
          {"theta_final", r.theta_final},
          {"distance_bound", r.distance_bound},
          {"distance_bound_clamped", r.distance_bound_clamped},
          {"angle_bound", r.angle_bound},
          {"angle_bound_raw", r.angle_bound_raw},
          {"min_queries", r.min_queries},
          {"classical_deterministic", r.classical_deterministic},
          {"classical_probabilistic", r.classical_probabilistic}};
}

json to_json(const LemmaReport& r) {
  return {{"lemma_id", to_string(r.lemma_id)},
          {"n", r.n},
          {"t", r.t},
          {"w", r.w},
          {"measured", r.measured},
          {"bound", r.bound},
          {"slack", r.slack},
          {"passed", r.passed},
          {"seed", r.seed}};
}

json to_json(const OptimizationResult& r) {
  return {{"best_value", r.best_value},
          {"argmax", r.argmax},
          {"evaluations", r.evaluations},
          {"converged", r.converged},
          {"restart_values", r.restart_values}};
}

json to_json(const TightnessReport& r) {
  return {{"n", r.n},
          {"w", r.w},
          {"t", r.t},
          {"optimizer_p", r.optimizer_p},
          {"grover_p", r.grover_p},
          {"bound_p", r.bound_p},
          {"converged", r.converged},
          {"agree", r.agree},
          {"within_bound", r.within_bound},
          {"optimization", to_json(r.optimization)}};
}

json to_json(const CampaignSummary& s) {
  return {{"reports", s.reports},
          {"failures", s.failures},
          {"random_instances", s.random_instances},
          {"constructed_instances", s.constructed_instances},
          {"worst_slack", s.worst_slack}};
}

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

json rounded(const json& doc) {
  if (doc.is_number_float()) return round_significant(doc.get<double>());
  if (doc.is_array() || doc.is_object()) {
    json out = doc;
    for (auto it = out.begin(); it != out.end(); ++it) *it = rounded(*it);
    return out;
  }
  return doc;
}

}  // namespace qbl
