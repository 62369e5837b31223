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

// Dense complex linear algebra substrate: states over the |i; w> basis,
// unitaries, block projectors and a seeded random source.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <boost/random/mersenne_twister.hpp>

#include "qbl/common.hpp"

namespace qbl {

using Complex = std::complex<double>;

/// Seeded pseudo-random stream. Built on boost.random so that the sequence
/// depends only on the seed, not on the standard library implementation.
/// Not thread-safe; give each concurrent task its own derived seed.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();
  double uniform();                            // [0, 1)
  double normal();                             // N(0, 1)
  std::size_t uniform_index(std::size_t n);    // [0, n)

 private:
  std::uint64_t seed_;
  boost::random::mt19937_64 engine_;
};

/// Mixes `index` into `seed` (splitmix64 finalizer) to give per-instance or
/// per-worker seeds that are reproducible from the parent seed alone.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Amplitudes over the basis |i; w>, i in [0, N], w in [0, W), stored i-major
/// at position i*W + w so that block i is a contiguous slice.
class StateVector {
 public:
  StateVector(int n, int w);  // zero vector
  StateVector(int n, int w, Eigen::VectorXcd amplitudes);

  static StateVector basis(int n, int w, int block, int slot = 0);

  int n() const { return n_; }
  int w() const { return w_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  Eigen::Index index(int block, int slot) const {
    return static_cast<Eigen::Index>(block) * w_ + slot;
  }

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex at(int block, int slot) const { return amplitudes_[index(block, slot)]; }
  auto block(int i) const { return amplitudes_.segment(index(i, 0), w_); }

  double norm() const { return amplitudes_.norm(); }
  double block_norm(int i) const { return block(i).norm(); }
  bool is_zero() const { return amplitudes_.isZero(0.0); }

  StateVector scaled(Complex factor) const;

 private:
  int n_;
  int w_;
  Eigen::VectorXcd amplitudes_;
};

/// dim x dim matrix with U^dagger U = I to kEpsUnitary (max entry).
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Eigen::MatrixXcd entries);

  static UnitaryMatrix identity(Eigen::Index dim);

  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }

  /// max |U^dagger U - I|, entrywise
  static double unitarity_defect(const Eigen::MatrixXcd& m);

 private:
  Eigen::MatrixXcd entries_;
};

/// Orthogonal projector onto a set of index blocks. Idempotent and Hermitian
/// by construction since it only ever zeroes whole blocks.
class BlockProjector {
 public:
  BlockProjector(int n, int w, std::vector<int> blocks);

  static BlockProjector single(int n, int w, int block) {
    return BlockProjector(n, w, {block});
  }

  int n() const { return n_; }
  int w() const { return w_; }
  const std::vector<int>& blocks() const { return blocks_; }
  bool contains(int block) const;
  bool empty() const { return blocks_.empty(); }

  BlockProjector complement() const;

 private:
  int n_;
  int w_;
  std::vector<int> blocks_;  // sorted, unique
};

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const StateVector& a, const StateVector& b);

StateVector apply_unitary(const UnitaryMatrix& u, const StateVector& v);

StateVector project(const BlockProjector& p, const StateVector& v);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
/// diag(R) pushed back into Q.
UnitaryMatrix haar_random_unitary(Eigen::Index dim, RandomSource& rng);

}  // namespace qbl
