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

// JSON forms of algorithms and reports.
//
// Algorithm document:
//   {"n": N, "w": W,
//    "unitaries": [[[re, im], ...], ...],   // one row-major d*d list per U_t
//    "measurement": [[blocks of Pi_1], ..., [blocks of Pi_N]],
//    "abstain": [blocks] | null}

#include <string>

#include <json.hpp>

#include "qbl/bounds.hpp"
#include "qbl/optimize.hpp"
#include "qbl/query_model.hpp"
#include "qbl/verify.hpp"

namespace qbl {

nlohmann::ordered_json algorithm_to_json(const QueryAlgorithm& a);
/// Throws InvalidInput on schema errors or non-unitary matrices.
QueryAlgorithm algorithm_from_json(const nlohmann::ordered_json& doc);

void save_algorithm(const QueryAlgorithm& a, const std::string& path);
QueryAlgorithm load_algorithm(const std::string& path);

nlohmann::ordered_json to_json(const BoundReport& r);
nlohmann::ordered_json to_json(const LemmaReport& r);
nlohmann::ordered_json to_json(const OptimizationResult& r);
nlohmann::ordered_json to_json(const TightnessReport& r);
nlohmann::ordered_json to_json(const CampaignSummary& s);

/// x rounded to `digits` significant decimal digits.
double round_significant(double x, int digits = 12);
/// Copy of `doc` with every floating-point leaf rounded to 12 significant digits.
nlohmann::ordered_json rounded(const nlohmann::ordered_json& doc);

}  // namespace qbl
