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

#include "qbl/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "qbl/bounds.hpp"
#include "qbl/grover.hpp"

namespace qbl {

namespace {

// ---------------------------------------------------------------------------
// constrained sums

double cs_objective(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// Pulls x back into the feasible set: clip to the box, then rescale onto the
// constraint surface when the quadratic constraint is violated.
void cs_retract(ProblemKind kind, std::vector<double>& x) {
  if (kind == ProblemKind::cs_distance) {
    double sq = 0.0;
    for (double& v : x) {
      v = std::clamp(v, 0.0, 1.0);
      sq += v * v;
    }
    if (sq > 1.0) {
      const double inv = 1.0 / std::sqrt(sq);
      for (double& v : x) v *= inv;
    }
    return;
  }
  double sq = 0.0;
  for (double& v : x) {
    v = std::clamp(v, 0.0, kPi / 2);
    sq += std::sin(v) * std::sin(v);
  }
  if (sq > 1.0) {
    const double inv = 1.0 / std::sqrt(sq);
    for (double& v : x) v = std::asin(std::min(1.0, std::sin(v) * inv));
  }
}

struct RestartOutcome {
  double value;
  std::vector<double> point;
};

OptimizationResult aggregate(std::vector<RestartOutcome> outcomes, long evaluations) {
  OptimizationResult result;
  result.evaluations = evaluations;
  std::sort(outcomes.begin(), outcomes.end(),
            [](const RestartOutcome& a, const RestartOutcome& b) { return a.value > b.value; });
  for (const auto& o : outcomes) result.restart_values.push_back(o.value);
  result.best_value = outcomes.front().value;
  result.argmax = outcomes.front().point;
  result.converged = outcomes.size() >= 2 &&
                     outcomes[0].value - outcomes[1].value < kConvergenceSpread;
  return result;
}

// ---------------------------------------------------------------------------
// algorithm search

Eigen::MatrixXcd exp_i_times(const Eigen::MatrixXcd& k, double step) {
  return exp_i_hermitian(step * k);
}

struct SearchState {
  int n;
  int w;
  std::vector<Eigen::MatrixXcd> unitaries;
};

// Per-oracle success probabilities for the canonical measurement.
std::vector<double> successes(const SearchState& s) {
  const Eigen::Index w = s.w;
  std::vector<double> out(s.n);
  for (int y = 1; y <= s.n; ++y) {
    Eigen::VectorXcd v = s.unitaries[0].col(0);
    for (std::size_t k = 1; k < s.unitaries.size(); ++k) {
      v.segment(y * w, w) *= -1.0;
      v = s.unitaries[k] * v;
    }
    out[y - 1] = v.segment(y * w, w).squaredNorm();
  }
  return out;
}

double softmin(const std::vector<double>& values, double beta, std::vector<double>* weights) {
  const double lo = *std::min_element(values.begin(), values.end());
  double z = 0.0;
  std::vector<double> e(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    e[i] = std::exp(-beta * (values[i] - lo));
    z += e[i];
  }
  if (weights) {
    weights->resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) (*weights)[i] = e[i] / z;
  }
  return lo - std::log(z) / beta;
}

// Riemannian gradient of sum_y weight_y * s_y with respect to right-multiplied
// generators U_k -> U_k exp(i eps G_k): the Hermitian K_k with
// d/d eps = tr(G_k K_k).
std::vector<Eigen::MatrixXcd> gradient(const SearchState& s, const std::vector<double>& weights) {
  const Eigen::Index w = s.w;
  const Eigen::Index d = s.unitaries[0].rows();
  const std::size_t steps = s.unitaries.size();
  std::vector<Eigen::MatrixXcd> grad(steps, Eigen::MatrixXcd::Zero(d, d));
  std::vector<Eigen::VectorXcd> inputs(steps);
  for (int y = 1; y <= s.n; ++y) {
    const double weight = weights[y - 1];
    if (weight < 1e-300) continue;
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(d);
    x[0] = 1.0;
    for (std::size_t k = 0; k < steps; ++k) {
      if (k > 0) x.segment(y * w, w) *= -1.0;
      inputs[k] = x;
      x = s.unitaries[k] * x;
    }
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(d);
    c.segment(y * w, w) = x.segment(y * w, w);
    for (std::size_t k = steps; k-- > 0;) {
      const Eigen::VectorXcd chi = s.unitaries[k].adjoint() * c;
      const Eigen::MatrixXcd a = inputs[k] * chi.adjoint();
      grad[k] += (Complex(0.0, 2.0 * weight)) * (a - a.adjoint()) * 0.5;
      c = chi;
      if (k > 0) c.segment(y * w, w) *= -1.0;
    }
  }
  return grad;
}

struct SearchOutcome {
  SearchState state;
  double min_success;
  long evaluations;
};

// Line-searched ascent on the soft minimum, sharpening the temperature each
// time progress stalls.
SearchOutcome ascend(SearchState state, long budget) {
  constexpr double kBetaStart = 8.0;
  constexpr double kBetaMax = 1e7;
  constexpr double kStepFloor = 1e-12;

  long evals = 0;
  double beta = kBetaStart;
  double step = 0.2;
  std::vector<double> weights;
  std::vector<double> s = successes(state);
  ++evals;
  double f = softmin(s, beta, &weights);

  while (evals < budget) {
    const std::vector<Eigen::MatrixXcd> grad = gradient(state, weights);
    ++evals;
    double gnorm = 0.0;
    for (const auto& g : grad) gnorm += g.squaredNorm();
    gnorm = std::sqrt(gnorm);

    bool moved = false;
    if (gnorm > 1e-14) {
      while (step > kStepFloor && evals < budget) {
        SearchState trial = state;
        for (std::size_t k = 0; k < grad.size(); ++k) {
          trial.unitaries[k] = trial.unitaries[k] * exp_i_times(grad[k], step / gnorm);
        }
        std::vector<double> ts = successes(trial);
        ++evals;
        std::vector<double> tw;
        const double tf = softmin(ts, beta, &tw);
        if (tf > f) {
          state = std::move(trial);
          s = std::move(ts);
          weights = std::move(tw);
          moved = tf - f > 1e-15;
          f = tf;
          step = std::min(step * 2.0, 1.0);
          break;
        }
        step *= 0.5;
      }
    }
    if (!moved) {
      if (beta >= kBetaMax) break;
      beta *= 8.0;
      step = std::max(step, 1e-3);
      f = softmin(s, beta, &weights);
    }
  }
  const double worst = *std::min_element(s.begin(), s.end());
  return {std::move(state), worst, evals};
}

}  // namespace

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::cs_distance: return "cs_distance";
    case ProblemKind::cs_angle: return "cs_angle";
    case ProblemKind::best_algorithm: return "best_algorithm";
  }
  return "unknown";
}

OptimizationResult maximize_cs(ProblemKind kind, int n, long budget, int restarts,
                               std::uint64_t seed) {
  if (kind == ProblemKind::best_algorithm) {
    throw InvalidInput("maximize_cs handles only the constrained-sum problems");
  }
  if (n < 1) throw InvalidInput("N must be at least 1");
  if (budget < 1) throw InvalidInput("budget must be at least 1");
  if (restarts < 1) throw InvalidInput("restarts must be at least 1");

  const double upper = (kind == ProblemKind::cs_distance) ? 1.0 : kPi / 2;
  const double step = 0.5 * upper / std::sqrt(static_cast<double>(n));
  std::vector<RestartOutcome> outcomes;
  long evaluations = 0;
  for (int r = 0; r < restarts; ++r) {
    RandomSource rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<double> x(n);
    for (double& v : x) v = upper * rng.uniform();
    cs_retract(kind, x);
    double value = cs_objective(x);
    long used = 1;
    // Projected ascent along the all-ones gradient: the fixed point is the
    // equal-coordinate maximizer on the constraint surface.
    while (used < budget) {
      std::vector<double> next = x;
      for (double& v : next) v += step;
      cs_retract(kind, next);
      ++used;
      double delta = 0.0;
      for (int i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - x[i]));
      x = std::move(next);
      value = cs_objective(x);
      if (delta < 1e-15) break;
    }
    evaluations += used;
    outcomes.push_back({value, std::move(x)});
  }
  return aggregate(std::move(outcomes), evaluations);
}

Eigen::MatrixXcd hermitian_from_parameters(Eigen::Index d, std::span<const double> params) {
  if (static_cast<Eigen::Index>(params.size()) != d * d) {
    throw InvalidInput("Hermitian generator needs d^2 = " + std::to_string(d * d) +
                       " parameters, got " + std::to_string(params.size()));
  }
  Eigen::MatrixXcd h(d, d);
  std::size_t at = 0;
  for (Eigen::Index i = 0; i < d; ++i) h(i, i) = params[at++];
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      h(i, j) = Complex(params[at], params[at + 1]);
      h(j, i) = std::conj(h(i, j));
      at += 2;
    }
  }
  return h;
}

Eigen::MatrixXcd exp_i_hermitian(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) phases[i] = std::polar(1.0, lambda[i]);
  const Eigen::MatrixXcd& v = eig.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

QueryAlgorithm algorithm_from_parameters(int n, int w, int t, std::span<const double> params) {
  if (n < 1 || w < 1 || t < 0) throw InvalidInput("invalid algorithm shape");
  const Eigen::Index d = static_cast<Eigen::Index>(n + 1) * w;
  const std::size_t per = static_cast<std::size_t>(d * d);
  if (params.size() != per * (t + 1)) {
    throw InvalidInput("expected " + std::to_string(per * (t + 1)) + " parameters, got " +
                       std::to_string(params.size()));
  }
  std::vector<UnitaryMatrix> us;
  us.reserve(t + 1);
  for (int k = 0; k <= t; ++k) {
    us.emplace_back(exp_i_hermitian(hermitian_from_parameters(d, params.subspan(k * per, per))));
  }
  return QueryAlgorithm(n, w, std::move(us));
}

std::vector<double> parameters_from_algorithm(const QueryAlgorithm& a) {
  std::vector<double> params;
  for (const auto& u : a.unitaries()) {
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u.matrix());
    const Eigen::MatrixXcd& q = schur.matrixU();
    const Eigen::MatrixXcd& tri = schur.matrixT();
    Eigen::VectorXcd angles(tri.rows());
    for (Eigen::Index i = 0; i < tri.rows(); ++i) angles[i] = std::arg(tri(i, i));
    const Eigen::MatrixXcd h = q * angles.asDiagonal() * q.adjoint();
    const Eigen::Index d = h.rows();
    for (Eigen::Index i = 0; i < d; ++i) params.push_back(h(i, i).real());
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = i + 1; j < d; ++j) {
        params.push_back(h(i, j).real());
        params.push_back(h(i, j).imag());
      }
    }
  }
  return params;
}

OptimizationResult best_success(int n, int w, int t, long budget, int restarts,
                                RandomSource& rng) {
  if (n < 1 || w < 1 || t < 0) throw InvalidInput("invalid algorithm shape");
  if ((n + 1) * w > kMaxSearchDim) {
    throw InvalidInput("search dimension (N+1)*W = " + std::to_string((n + 1) * w) +
                       " exceeds the cap of " + std::to_string(kMaxSearchDim));
  }
  if (t > kMaxSearchQueries) {
    throw InvalidInput("search supports at most " + std::to_string(kMaxSearchQueries) +
                       " queries");
  }
  if (budget < 1) throw InvalidInput("budget must be at least 1");
  if (restarts < 1) throw InvalidInput("restarts must be at least 1");

  const Eigen::Index d = static_cast<Eigen::Index>(n + 1) * w;
  const std::uint64_t base = rng.next_u64();
  std::vector<RestartOutcome> outcomes;
  long evaluations = 0;
  for (int r = 0; r < restarts; ++r) {
    RandomSource local(derive_seed(base, static_cast<std::uint64_t>(r)));
    SearchState start{n, w, {}};
    for (int k = 0; k <= t; ++k) start.unitaries.push_back(haar_random_unitary(d, local).matrix());
    SearchOutcome found = ascend(std::move(start), budget);
    evaluations += found.evaluations;

    std::vector<UnitaryMatrix> us;
    for (auto& m : found.state.unitaries) us.emplace_back(std::move(m));
    const QueryAlgorithm algorithm(n, w, std::move(us));
    std::vector<double> params = parameters_from_algorithm(algorithm);
    // report what the parameter vector regenerates, not the raw iterate
    const double value = min_success(algorithm_from_parameters(n, w, t, params));
    outcomes.push_back({value, std::move(params)});
  }
  return aggregate(std::move(outcomes), evaluations);
}

OptimizationResult optimize(const OptimizationProblem& problem) {
  if (problem.kind == ProblemKind::best_algorithm) {
    RandomSource rng(problem.seed);
    return best_success(problem.n, problem.w, problem.t,
                        problem.budget > 0 ? problem.budget : kDefaultSearchBudget,
                        problem.restarts > 0 ? problem.restarts : kDefaultSearchRestarts, rng);
  }
  return maximize_cs(problem.kind, problem.n,
                     problem.budget > 0 ? problem.budget : kDefaultCsBudget,
                     problem.restarts > 0 ? problem.restarts : kDefaultCsRestarts, problem.seed);
}

double max_success_allowed(int n, int t) {
  if (t < 0) throw InvalidInput("query count must be non-negative");
  const double angle = std::min((2.0 * t + 1.0) * search_angle(n), kPi / 2);
  const double s = std::sin(angle);
  return s * s;
}

TightnessReport tightness_report(int n, int w, int t, long budget, int restarts,
                                 RandomSource& rng) {
  TightnessReport report;
  report.n = n;
  report.w = w;
  report.t = t;
  report.optimization = best_success(n, w, t, budget, restarts, rng);
  report.optimizer_p = report.optimization.best_value;
  report.converged = report.optimization.converged;

  if (n >= 2) {
    const double theta = search_angle(n);
    if ((2.0 * t + 1.0) * theta <= kPi / 2) {
      report.grover_p = min_success(build_grover(n, t));
    } else {
      // park amplitude on block 0 so that t iterations land exactly on pi/2
      const double mixing =
          std::asin(std::min(1.0, std::sqrt(n) * std::sin(kPi / (2.0 * (2 * t + 1)))));
      report.grover_p = min_success(build_mixed_grover(n, t, mixing));
    }
  } else {
    report.grover_p = 1.0;  // N = 1: answer 1 with no queries
  }
  report.bound_p = max_success_allowed(n, t);

  constexpr double kAgree = 1e-3;
  report.within_bound = report.optimizer_p <= report.bound_p + kAgree;
  report.agree = std::abs(report.optimizer_p - report.grover_p) < kAgree &&
                 std::abs(report.optimizer_p - report.bound_p) < kAgree &&
                 std::abs(report.grover_p - report.bound_p) < kAgree;
  return report;
}

}  // namespace qbl
