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

#include "qbl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qbl/bounds.hpp"
#include "qbl/grover.hpp"
#include "qbl/optimize.hpp"
#include "qbl/serialization.hpp"
#include "qbl/verify.hpp"

#ifndef QBL_VERSION
#define QBL_VERSION "dev"
#endif

namespace qbl::cli {

using json = nlohmann::ordered_json;

namespace {

struct CommonOptions {
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* sub, CommonOptions& common, const std::string& default_format) {
  common.format = default_format;
  sub->add_option("--seed", common.seed, "random seed (recorded in every output record)")
      ->envname("QBL_SEED");
  sub->add_option("-o,--output", common.output, "write records to this file instead of stdout");
  sub->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

// Either stdout or the --output file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidInput("cannot open output file " + path);
      stream_ = &file_;
    }
  }

  void line(const std::string& text) {
    *stream_ << (text + '\n');
    stream_->flush();
  }
  void record(const json& doc) { line(rounded(doc).dump()); }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

json header(const std::string& command, const CommonOptions& common) {
  return {{"command", command}, {"qbl_version", version()}, {"seed", common.seed}};
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_cell(const json& v) {
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_csv(Sink& sink, const std::vector<json>& rows) {
  if (rows.empty()) return;
  std::string head;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
    if (!head.empty()) head += ',';
    head += it.key();
  }
  sink.line(head);
  for (const json& row : rows) {
    std::string line;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
      if (!line.empty()) line += ',';
      line += csv_cell(row.at(it.key()));
    }
    sink.line(line);
  }
}

IntRange parse_range(const std::string& text, const std::string& what) {
  try {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse " + what + " range '" + text + "' (expected LO:HI or V)");
  }
}

// Expands --config FILE into flags for every key the command line does not
// already set. The file is a flat JSON object keyed by flag names.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (!path) return args;

  std::ifstream in(*path);
  if (!in) throw InvalidInput("cannot open config file " + *path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidInput("config file " + *path + ": " + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("config file must hold a JSON object");

  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::vector<std::string> extra;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string flag = "--" + it.key();
    if (given(flag)) continue;
    const json& v = it.value();
    if (v.is_boolean()) {
      if (v.get<bool>()) extra.push_back(flag);
      continue;
    }
    std::string value;
    if (v.is_array()) {
      for (const json& item : v) {
        if (!value.empty()) value += ',';
        value += item.is_string() ? item.get<std::string>() : item.dump();
      }
    } else {
      value = v.is_string() ? v.get<std::string>() : v.dump();
    }
    extra.push_back(flag);
    extra.push_back(value);
  }
  const auto sub = std::find_if(args.begin(), args.end(),
                                [](const std::string& a) { return a.rfind('-', 0) != 0; });
  const auto at = (sub == args.end()) ? args.end() : sub + 1;
  args.insert(at, extra.begin(), extra.end());
  return args;
}

// ---------------------------------------------------------------------------

struct BoundArgs {
  int n = 0;
  double p = 0.0;
  std::string version = "both";
};

int cmd_bound(const BoundArgs& a, const CommonOptions& common, std::ostream& out) {
  const BoundReport r = bound_report(a.n, a.p);
  json doc = header("bound", common);
  doc["version"] = a.version;
  doc.update(to_json(r));
  const int distance_queries =
      static_cast<int>(std::max(0.0, std::ceil(r.distance_bound_clamped - kCeilGuard)));
  if (a.version != "angle") doc["distance_queries"] = distance_queries;
  if (a.version != "distance") doc["angle_queries"] = r.min_queries;
  Sink sink(common.output, out);
  if (common.format == "csv") {
    write_csv(sink, {doc});
  } else {
    sink.record(doc);
  }
  return kExitOk;
}

struct GroverArgs {
  int n = 0;
  std::optional<int> t;
  std::optional<double> p;
  std::string save;
};

int cmd_grover(const GroverArgs& a, const CommonOptions& common, std::ostream& out,
               std::ostream& err) {
  if (a.t.has_value() == a.p.has_value()) {
    err << "grover: give exactly one of --t or --p\n";
    return kExitUsage;
  }
  json doc = header("grover", common);
  doc["n"] = a.n;
  std::optional<QueryAlgorithm> algorithm;
  if (a.t) {
    algorithm = build_grover(a.n, *a.t);
    doc["variant"] = "plain";
    doc["closed_form"] = grover_success_closed_form(a.n, *a.t);
  } else {
    try {
      ExactGrover exact = build_exact_grover(a.n, *a.p);
      doc["p_target"] = *a.p;
      doc["variant"] = exact.tuned ? "tuned" : "plain";
      doc["mixing_angle"] = exact.mixing_angle;
      doc["min_queries"] = min_queries(a.n, *a.p);
      algorithm = std::move(exact.algorithm);
    } catch (const TuningError& e) {
      json fail = header("grover", common);
      fail["n"] = a.n;
      fail["p_target"] = *a.p;
      fail["error"] = e.what();
      fail["best_achieved"] = e.best_achieved();
      Sink(common.output, out).record(fail);
      return kExitVerification;
    }
  }
  doc["t"] = algorithm->queries();
  std::vector<double> per_y;
  for (int y = 1; y <= a.n; ++y) per_y.push_back(success_probability(*algorithm, y));
  doc["success"] = per_y;
  doc["min_success"] = *std::min_element(per_y.begin(), per_y.end());
  if (!a.save.empty()) save_algorithm(*algorithm, a.save);

  Sink sink(common.output, out);
  if (common.format == "csv") {
    doc.erase("success");
    write_csv(sink, {doc});
  } else {
    sink.record(doc);
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string lemma = "all";
  std::string n = "2:8";
  std::string t = "0:5";
  std::string w = "1:2";
  int count = 100;
  std::string algorithm;
  bool no_grover = false;
};

int cmd_verify(const VerifyArgs& a, const CommonOptions& common, std::ostream& out,
               std::ostream& err) {
  std::vector<LemmaId> lemmas;
  if (a.lemma == "all") {
    lemmas = {LemmaId::L1, LemmaId::L2, LemmaId::L3, LemmaId::L4,
              LemmaId::L5, LemmaId::L6, LemmaId::T1, LemmaId::T2};
  } else {
    std::stringstream ss(a.lemma);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto id = parse_lemma_id(item);
      if (!id) {
        err << "verify: unknown lemma id '" << item << "' (expected L1..L6, T1, T2 or all)\n";
        return kExitUsage;
      }
      lemmas.push_back(*id);
    }
  }
  if (common.format != "json") {
    err << "verify: campaigns are written as JSON lines only\n";
    return kExitUsage;
  }

  Sink sink(common.output, out);
  auto emit = [&](const LemmaReport& r) {
    json doc = header("verify", common);
    doc.update(to_json(r));
    sink.record(doc);
  };

  CampaignSummary summary;
  if (!a.algorithm.empty()) {
    const QueryAlgorithm algorithm = load_algorithm(a.algorithm);
    summary.worst_slack = std::numeric_limits<double>::infinity();
    for (LemmaId id : lemmas) {
      const LemmaReport r = (id == LemmaId::L1 || id == LemmaId::L2)
                                ? check_cauchy_schwarz(id, algorithm.n(), common.seed)
                                : check(id, algorithm, common.seed);
      ++summary.reports;
      if (!r.passed) ++summary.failures;
      summary.worst_slack = std::min(summary.worst_slack, r.slack);
      emit(r);
    }
    summary.constructed_instances = 1;
  } else {
    CampaignConfig config;
    config.lemmas = lemmas;
    config.n = parse_range(a.n, "--n");
    config.t = parse_range(a.t, "--t");
    config.w = parse_range(a.w, "--w");
    config.count = a.count;
    config.seed = common.seed;
    config.include_grover = !a.no_grover;
    summary = run_campaign(config, emit);
  }

  json doc = header("verify", common);
  doc["lemma"] = a.lemma;
  doc["n_range"] = a.n;
  doc["t_range"] = a.t;
  doc["w_range"] = a.w;
  doc["count"] = a.count;
  doc["summary"] = to_json(summary);
  doc["all_passed"] = summary.failures == 0;
  sink.record(doc);
  return summary.failures == 0 ? kExitOk : kExitVerification;
}

struct OptimizeArgs {
  int n = 0;
  int w = 1;
  int t = 0;
  long budget = kDefaultSearchBudget;
  int restarts = kDefaultSearchRestarts;
  std::string save;
};

int cmd_optimize(const OptimizeArgs& a, const CommonOptions& common, std::ostream& out) {
  RandomSource rng(common.seed);
  const TightnessReport r = tightness_report(a.n, a.w, a.t, a.budget, a.restarts, rng);
  json doc = header("optimize", common);
  doc["budget"] = a.budget;
  doc["restarts"] = a.restarts;
  doc.update(to_json(r));
  if (!a.save.empty()) {
    save_algorithm(algorithm_from_parameters(a.n, a.w, a.t, r.optimization.argmax), a.save);
  }
  Sink sink(common.output, out);
  if (common.format == "csv") {
    doc.erase("optimization");
    write_csv(sink, {doc});
  } else {
    sink.record(doc);
  }
  return r.within_bound ? kExitOk : kExitVerification;
}

struct SweepArgs {
  std::vector<int> n;
  std::vector<double> p;
};

// Fewest Grover-family queries reaching p: plain iterations while they do
// not overshoot, otherwise the tuned start state that lands on pi/2.
std::pair<int, std::string> grover_queries_for(int n, double p) {
  const double theta = search_angle(n);
  for (int t = 0;; ++t) {
    const double angle = (2.0 * t + 1.0) * theta;
    const double plain = std::pow(std::sin(angle), 2);
    if (plain >= p - 1e-12 && angle <= kPi) return {t, "plain"};
    if (angle >= kPi / 2) return {t, "tuned"};
  }
}

int cmd_sweep(const SweepArgs& a, const CommonOptions& common, std::ostream& out,
              std::ostream& err) {
  if (a.n.empty() || a.p.empty()) {
    err << "sweep: --n and --p lists must be non-empty\n";
    return kExitUsage;
  }
  std::vector<json> rows;
  for (int n : a.n) {
    for (double p : a.p) {
      const BoundReport r = bound_report(n, p);
      json row;
      row["n"] = n;
      row["p"] = p;
      row["distance_bound"] = r.distance_bound;
      row["angle_bound"] = r.angle_bound;
      row["min_queries"] = r.min_queries;
      if (n >= 2) {
        const auto [t, variant] = grover_queries_for(n, p);
        row["grover_T_achieving_p"] = t;
        row["grover_variant"] = variant;
      } else {
        row["grover_T_achieving_p"] = 0;
        row["grover_variant"] = "trivial";
      }
      row["classical_det"] = r.classical_deterministic;
      row["classical_prob"] = r.classical_probabilistic;
      row["seed"] = common.seed;
      row["qbl_version"] = version();
      rows.push_back(std::move(row));
    }
  }
  Sink sink(common.output, out);
  if (common.format == "csv") {
    write_csv(sink, rows);
  } else {
    for (const json& row : rows) {
      json doc = header("sweep", common);
      doc.update(row);
      sink.record(doc);
    }
  }
  return kExitOk;
}

}  // namespace

std::string version() { return QBL_VERSION; }

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Query-complexity laboratory for unordered search", "qbl"};
  app.require_subcommand(1);

  CommonOptions bound_common, grover_common, verify_common, optimize_common, sweep_common;

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "evaluate the query lower bounds for (N, p)");
  bound->add_option("--n", bound_args.n, "search space size N")->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  bound->add_option("--p", bound_args.p, "target success probability")->required()
      ->check(CLI::Range(0.0, 1.0));
  bound->add_option("--version", bound_args.version, "which bound to highlight")
      ->check(CLI::IsMember({"distance", "angle", "both"}));
  add_common(bound, bound_common, "json");

  GroverArgs grover_args;
  auto* grover = app.add_subcommand("grover", "simulate Grover search against every oracle");
  grover->add_option("--n", grover_args.n, "search space size N")->required();
  grover->add_option("--t", grover_args.t, "number of iterations")->check(CLI::Range(0, std::numeric_limits<int>::max()));
  grover->add_option("--p", grover_args.p, "target probability for the exact variant")
      ->check(CLI::Range(0.0, 1.0));
  grover->add_option("--save", grover_args.save, "write the algorithm as JSON");
  add_common(grover, grover_common, "json");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a lemma/theorem verification campaign");
  verify->add_option("--lemma", verify_args.lemma, "L1..L6, T1, T2, comma list, or all");
  verify->add_option("--n", verify_args.n, "N range LO:HI");
  verify->add_option("--t", verify_args.t, "T range LO:HI");
  verify->add_option("--w", verify_args.w, "W range LO:HI");
  verify->add_option("--count", verify_args.count, "number of random instances")
      ->check(CLI::Range(0, std::numeric_limits<int>::max()));
  verify->add_option("--algorithm", verify_args.algorithm, "check one saved algorithm instead");
  verify->add_flag("--no-grover", verify_args.no_grover, "skip the Grover instances");
  add_common(verify, verify_common, "json");

  OptimizeArgs optimize_args;
  auto* optimize = app.add_subcommand("optimize", "search all algorithms at tiny (N, W, T)");
  optimize->add_option("--n", optimize_args.n, "search space size N")->required();
  optimize->add_option("--w", optimize_args.w, "workspace width W");
  optimize->add_option("--t", optimize_args.t, "number of queries");
  optimize->add_option("--budget", optimize_args.budget, "objective evaluations per restart");
  optimize->add_option("--restarts", optimize_args.restarts, "multi-start count");
  optimize->add_option("--save", optimize_args.save, "write the best algorithm as JSON");
  add_common(optimize, optimize_common, "json");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "tabulate bounds against Grover and classical counts");
  sweep->add_option("--n", sweep_args.n, "comma-separated N values")->delimiter(',');
  sweep->add_option("--p", sweep_args.p, "comma-separated p values")->delimiter(',');
  add_common(sweep, sweep_common, "csv");

  try {
    std::vector<std::string> args = apply_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*bound) return cmd_bound(bound_args, bound_common, out);
    if (*grover) return cmd_grover(grover_args, grover_common, out, err);
    if (*verify) return cmd_verify(verify_args, verify_common, out, err);
    if (*optimize) return cmd_optimize(optimize_args, optimize_common, out);
    if (*sweep) return cmd_sweep(sweep_args, sweep_common, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qbl::cli
