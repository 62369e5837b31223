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

#include "qbl/grover.hpp"

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "qbl/bounds.hpp"

namespace qbl {

namespace {

constexpr double kRootTolerance = 1e-10;
constexpr int kScanPoints = 64;

// Householder reflection exchanging e_0 and the real unit vector `target`.
Eigen::MatrixXcd reflection_from_origin(const Eigen::VectorXd& target) {
  const Eigen::Index d = target.size();
  Eigen::VectorXd u = -target;
  u[0] += 1.0;
  const double uu = u.squaredNorm();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(d, d);
  if (uu > 1e-300) h -= 2.0 * u * u.transpose() / uu;
  return h.cast<Complex>();
}

Eigen::VectorXd mixed_start(int n, double mixing_angle) {
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n + 1, std::sin(mixing_angle) / std::sqrt(n));
  v[0] = std::cos(mixing_angle);
  return v;
}

void require_grover_n(int n) {
  if (n < 2) throw InvalidInput("Grover search needs N >= 2, got " + std::to_string(n));
}

}  // namespace

QueryAlgorithm build_grover(const GroverParams& params) {
  require_grover_n(params.n);
  if (params.t < 0) throw InvalidInput("iteration count must be non-negative");
  if (params.exact_target && params.t != min_queries(params.n, *params.exact_target)) {
    throw InvalidInput("exact target requires t = min_queries(n, p) = " +
                       std::to_string(min_queries(params.n, *params.exact_target)));
  }
  const int n = params.n;
  const Eigen::VectorXd start = mixed_start(n, kPi / 2);

  Eigen::MatrixXcd diffusion = Eigen::MatrixXcd::Identity(n + 1, n + 1);
  diffusion.bottomRightCorner(n, n) =
      (2.0 * start.tail(n) * start.tail(n).transpose() - Eigen::MatrixXd::Identity(n, n))
          .cast<Complex>();

  std::vector<UnitaryMatrix> us;
  us.reserve(params.t + 1);
  us.emplace_back(reflection_from_origin(start));
  for (int k = 0; k < params.t; ++k) us.emplace_back(diffusion);
  return QueryAlgorithm(n, 1, std::move(us));
}

double grover_success_closed_form(int n, int t) {
  require_grover_n(n);
  if (t < 0) throw InvalidInput("iteration count must be non-negative");
  const double s = std::sin((2.0 * t + 1.0) * search_angle(n));
  return s * s;
}

QueryAlgorithm build_mixed_grover(int n, int t, double mixing_angle) {
  require_grover_n(n);
  if (t < 0) throw InvalidInput("iteration count must be non-negative");
  const Eigen::VectorXd start = mixed_start(n, mixing_angle);
  const Eigen::MatrixXcd reflect =
      (2.0 * start * start.transpose() - Eigen::MatrixXd::Identity(n + 1, n + 1))
          .cast<Complex>();
  std::vector<UnitaryMatrix> us;
  us.reserve(t + 1);
  us.emplace_back(reflection_from_origin(start));
  for (int k = 0; k < t; ++k) us.emplace_back(reflect);
  return QueryAlgorithm(n, 1, std::move(us));
}

ExactGrover build_exact_grover(int n, double p) {
  require_grover_n(n);
  if (!(p > 0.0 && p <= 1.0)) throw InvalidInput("target probability must lie in (0, 1]");
  const int t = min_queries(n, p);

  QueryAlgorithm plain = build_grover({n, t, p});
  const double plain_success = min_success(plain);
  if (plain_success >= p - kPassTolerance) {
    return ExactGrover{std::move(plain), t, false, kPi / 2, plain_success};
  }

  auto success_at = [&](double angle) { return min_success(build_mixed_grover(n, t, angle)); };

  std::vector<double> grid(kScanPoints + 1);
  std::vector<double> values(kScanPoints + 1);
  for (int k = 0; k <= kScanPoints; ++k) {
    grid[k] = (kPi / 2) * k / kScanPoints;
    values[k] = success_at(grid[k]);
  }

  // Largest grid angle that already reaches p: the root sits between it and
  // its right neighbour, where success decreases towards the plain value.
  for (int k = kScanPoints - 1; k >= 0; --k) {
    if (values[k] >= p) {
      std::uintmax_t iters = 200;
      auto f = [&](double a) { return success_at(a) - p; };
      auto tol = [](double lo, double hi) { return std::abs(hi - lo) < kRootTolerance; };
      const auto [lo, hi] = boost::math::tools::toms748_solve(
          f, grid[k], grid[k + 1], values[k] - p, values[k + 1] - p, tol, iters);
      // keep the endpoint on the feasible side
      const double angle = (success_at(hi) >= p) ? hi : lo;
      QueryAlgorithm tuned = build_mixed_grover(n, t, angle);
      const double achieved = min_success(tuned);
      return ExactGrover{std::move(tuned), t, true, angle, achieved};
    }
  }

  // No grid point reaches p (typically p = 1, a tangency): maximise instead.
  int best = 0;
  for (int k = 1; k <= kScanPoints; ++k) {
    if (values[k] > values[best]) best = k;
  }
  const double lo = grid[std::max(best - 1, 0)];
  const double hi = grid[std::min(best + 1, kScanPoints)];
  const auto [angle, neg] = boost::math::tools::brent_find_minima(
      [&](double a) { return -success_at(a); }, lo, hi, 40);
  const double achieved = -neg;
  if (achieved < p - 1e-6) {
    throw TuningError("tuned Grover reaches only " + std::to_string(achieved) + " < " +
                          std::to_string(p) + " with " + std::to_string(t) + " queries",
                      achieved);
  }
  QueryAlgorithm tuned = build_mixed_grover(n, t, angle);
  const double simulated = min_success(tuned);
  return ExactGrover{std::move(tuned), t, true, angle, simulated};
}

}  // namespace qbl
