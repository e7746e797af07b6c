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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcorr/qcorr.hpp"

namespace qcorr::testing {

inline oracle::M4 to_m4(const Matrix& m) { return m; }

inline void expect_matrix_near(const Matrix& a, const Matrix& b, double tol) {
  ASSERT_EQ(a.rows(), b.rows());
  ASSERT_EQ(a.cols(), b.cols());
  EXPECT_LE((a - b).cwiseAbs().maxCoeff(), tol);
}

inline OptimizerConfig test_config(std::uint64_t seed = 1) {
  OptimizerConfig c;
  c.seed = seed;
  return c;
}

/// sum_k p_k |a_k b_k><a_k b_k| over random local bases.
inline DensityMatrix random_classical_classical(RandomSource& rng) {
  const Matrix ua = random_unitary(2, rng), ub = random_unitary(2, rng);
  Matrix rho = Matrix::Zero(4, 4);
  double total = 0.0;
  std::vector<double> p(4);
  for (auto& x : p) total += (x = rng.uniform(0.05, 1.0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Vector v = kron(Vector(ua.col(a)), Vector(ub.col(b)));
      rho += p[2 * a + b] / total * v * v.adjoint();
    }
  return DensityMatrix({2, 2}, rho);
}

/// sum_k p_k |a_k><a_k| (x) rho_k with A classical.
inline DensityMatrix random_classical_quantum(RandomSource& rng) {
  const Matrix ua = random_unitary(2, rng);
  const double p = rng.uniform(0.1, 0.9);
  const auto r0 = random_density({2}, 2, rng);
  const auto r1 = random_density({2}, 2, rng);
  const Matrix m = p * kron(Matrix(ua.col(0) * ua.col(0).adjoint()), r0.data()) +
                   (1 - p) * kron(Matrix(ua.col(1) * ua.col(1).adjoint()), r1.data());
  return DensityMatrix({2, 2}, m);
}

}  // namespace qcorr::testing
