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

#include "qbl/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <boost/random/uniform_int_distribution.hpp>

namespace qbl {

namespace {

void require_dims(int n, int w) {
  if (n < 1) throw InvalidInput("marked-index range N must be positive, got " + std::to_string(n));
  if (w < 1) throw InvalidInput("workspace width W must be positive, got " + std::to_string(w));
}

Eigen::Index state_dim(int n, int w) {
  return static_cast<Eigen::Index>(n + 1) * w;
}

void require_same_shape(const StateVector& a, const StateVector& b) {
  if (a.n() != b.n() || a.w() != b.w()) {
    throw InvalidInput("state dimension mismatch: (N=" + std::to_string(a.n()) + ", W=" +
                       std::to_string(a.w()) + ") vs (N=" + std::to_string(b.n()) +
                       ", W=" + std::to_string(b.w()) + ")");
  }
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RandomSource::next_u64() { return engine_(); }

double RandomSource::uniform() {
  return boost::random::uniform_01<double>{}(engine_);
}

double RandomSource::normal() {
  return boost::random::normal_distribution<double>{0.0, 1.0}(engine_);
}

std::size_t RandomSource::uniform_index(std::size_t n) {
  if (n == 0) throw InvalidInput("uniform_index over an empty range");
  return boost::random::uniform_int_distribution<std::size_t>{0, n - 1}(engine_);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

StateVector::StateVector(int n, int w) : n_(n), w_(w) {
  require_dims(n, w);
  amplitudes_ = Eigen::VectorXcd::Zero(state_dim(n, w));
}

StateVector::StateVector(int n, int w, Eigen::VectorXcd amplitudes)
    : n_(n), w_(w), amplitudes_(std::move(amplitudes)) {
  require_dims(n, w);
  if (amplitudes_.size() != state_dim(n, w)) {
    throw InvalidInput("amplitude count " + std::to_string(amplitudes_.size()) +
                       " does not equal (N+1)*W = " + std::to_string(state_dim(n, w)));
  }
  if (!amplitudes_.allFinite()) throw InvalidInput("state has non-finite amplitudes");
}

StateVector StateVector::basis(int n, int w, int block, int slot) {
  StateVector v(n, w);
  if (block < 0 || block > n || slot < 0 || slot >= w) {
    throw InvalidInput("basis index (" + std::to_string(block) + ", " + std::to_string(slot) +
                       ") out of range");
  }
  v.amplitudes_[v.index(block, slot)] = 1.0;
  return v;
}

StateVector StateVector::scaled(Complex factor) const {
  return StateVector(n_, w_, amplitudes_ * factor);
}

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw InvalidInput("unitary must be a non-empty square matrix");
  }
  if (!entries_.allFinite()) throw InvalidInput("unitary has non-finite entries");
  const double defect = unitarity_defect(entries_);
  if (defect > kEpsUnitary) {
    throw InvalidInput("matrix is not unitary: max|U^dag U - I| = " + std::to_string(defect));
  }
}

UnitaryMatrix UnitaryMatrix::identity(Eigen::Index dim) {
  return UnitaryMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

double UnitaryMatrix::unitarity_defect(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  return (gram - Eigen::MatrixXcd::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
}

BlockProjector::BlockProjector(int n, int w, std::vector<int> blocks)
    : n_(n), w_(w), blocks_(std::move(blocks)) {
  require_dims(n, w);
  std::sort(blocks_.begin(), blocks_.end());
  blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
  for (int b : blocks_) {
    if (b < 0 || b > n) {
      throw InvalidInput("projector block " + std::to_string(b) + " outside [0, " +
                         std::to_string(n) + "]");
    }
  }
}

bool BlockProjector::contains(int block) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), block);
}

BlockProjector BlockProjector::complement() const {
  std::vector<int> rest;
  for (int b = 0; b <= n_; ++b) {
    if (!contains(b)) rest.push_back(b);
  }
  return BlockProjector(n_, w_, std::move(rest));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_shape(a, b);
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates the left operand
}

StateVector apply_unitary(const UnitaryMatrix& u, const StateVector& v) {
  if (u.dim() != v.dim()) {
    throw InvalidInput("unitary of dim " + std::to_string(u.dim()) +
                       " applied to state of dim " + std::to_string(v.dim()));
  }
  return StateVector(v.n(), v.w(), u.matrix() * v.amplitudes());
}

StateVector project(const BlockProjector& p, const StateVector& v) {
  if (p.n() != v.n() || p.w() != v.w()) {
    throw InvalidInput("projector shape does not match state shape");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.dim());
  for (int b : p.blocks()) {
    out.segment(v.index(b, 0), v.w()) = v.block(b);
  }
  return StateVector(v.n(), v.w(), std::move(out));
}

UnitaryMatrix haar_random_unitary(Eigen::Index dim, RandomSource& rng) {
  if (dim < 1) throw InvalidInput("Haar unitary dimension must be at least 1");
  const double scale = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd g(dim, dim);
  // column-major fill order is part of the determinism contract
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im) * scale;
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0);
  }
  return UnitaryMatrix(std::move(q));
}

}  // namespace qbl
