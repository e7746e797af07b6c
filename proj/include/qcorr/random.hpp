// Copyright 2026 The qcorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/QR>

#include "qcorr/hilbert.hpp"

namespace qcorr {

/// SplitMix64 finalizer; used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded generator. Gaussian samples are produced with Box-Muller on top of
/// mt19937_64 (whose output sequence is fixed by the standard), so a given
/// seed yields the same states on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Child source with a seed derived from (seed, split counter).
  RandomSource split() { return RandomSource(mix_seed(seed_ ^ mix_seed(++splits_))); }

  /// Child source for task `index`, independent of how many splits happened.
  RandomSource child(std::uint64_t index) const {
    return RandomSource(mix_seed(seed_ ^ mix_seed(index + 0x5bd1e995ULL)));
  }

  /// Uniform in [0, 1).
  double uniform() {
    return double(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
  }

 private:
  std::uint64_t seed_;
  std::uint64_t splits_ = 0;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

inline Matrix ginibre(int rows, int cols, RandomSource& rng) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

/// Haar-random pure state: normalized complex Gaussian vector.
inline PureState random_pure(const Dims& dims, RandomSource& rng) {
  Vector v(total_dim(dims));
  for (auto& z : v) z = rng.complex_normal();
  return PureState::normalized(dims, std::move(v));
}

/// Induced-measure density matrix of the given rank: partial trace of a Haar
/// pure state on dims x [rank].
inline DensityMatrix random_density(const Dims& dims, int rank, RandomSource& rng) {
  const int n = total_dim(dims);
  if (rank < 1 || rank > n) throw std::invalid_argument("rank must be in [1, prod(dims)]");
  const Matrix g = ginibre(n, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix::unchecked(dims, std::move(rho));
}

/// Haar-random unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal pushed into Q.
inline Matrix random_unitary(int dim, RandomSource& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

}  // namespace qcorr
