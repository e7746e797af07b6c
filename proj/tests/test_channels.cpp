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


#include "support.hpp"

namespace qcorr {
namespace {

using testing::expect_matrix_near;

Povm trine() {
  std::vector<Matrix> elements;
  for (int k = 0; k < 3; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 3.0;
    Vector v(2);
    v << std::cos(a / 2), std::sin(a / 2);
    elements.push_back(2.0 / 3.0 * v * v.adjoint());
  }
  return Povm(2, elements);
}

// sum_x P_x rho P_x with explicit projectors on the full space.
Matrix projector_sum(const Matrix& rho, const std::vector<Matrix>& projectors) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& p : projectors) out += p * rho * p;
  return out;
}

TEST(Povm, RejectsIncompleteSet) {
  try {
    Povm(2, {states::projector(states::ket(2, 0))});
    FAIL();
  } catch (const InvalidState& e) {
    EXPECT_EQ(e.invariant(), "povm completeness");
  }
  Matrix negative = Matrix::Identity(2, 2);
  negative(1, 1) = -0.5;
  EXPECT_THROW(Povm(2, {negative, Matrix::Identity(2, 2) - negative}), InvalidState);
  EXPECT_THROW(Povm(2, {}), std::invalid_argument);
  EXPECT_THROW(Povm(2, {Matrix::Identity(3, 3)}), std::invalid_argument);
}

TEST(ProjectiveBasis, ElementsAreRankOneIdempotent) {
  RandomSource rng(40);
  const ProjectiveBasis basis(random_unitary(3, rng));
  for (int x = 0; x < 3; ++x) {
    const Matrix p = basis.projector(x);
    EXPECT_LE(max_abs(p * p - p), 1e-10);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-10);
  }
  EXPECT_NO_THROW(Povm(3, basis.to_povm().elements()));
  EXPECT_THROW(ProjectiveBasis(Matrix::Ones(2, 2)), InvalidState);
}

TEST(Measure, ProbabilitiesAndPostStatesReconstructDephasedInput) {
  RandomSource rng(41);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_density({3}, 1 + i % 3, rng);
    const ProjectiveBasis basis(random_unitary(3, rng));
    const auto out = measure(rho, basis.to_povm());
    double total = 0;
    Matrix rebuilt = Matrix::Zero(3, 3);
    for (int x = 0; x < 3; ++x) {
      EXPECT_GE(out.probabilities[x], 0.0);
      total += out.probabilities[x];
      rebuilt += out.probabilities[x] * out.post_states[x].data();
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
    expect_matrix_near(rebuilt, dephase(rho, basis, 0).data(), 1e-10);
  }
}

TEST(MeasureChannel, Examples) {
  const auto comp = ProjectiveBasis::computational(2).to_povm();
  expect_matrix_near(measure_channel(DensityMatrix::maximally_mixed({2}), comp).data(),
                     Matrix::Identity(2, 2) / 2.0, 1e-12);
  Matrix pm(2, 2);
  pm.col(0) = states::plus_ket();
  pm.col(1) = states::minus_ket();
  const DensityMatrix zero({2}, states::projector(states::ket(2, 0)));
  expect_matrix_near(measure_channel(zero, ProjectiveBasis(pm).to_povm()).data(),
                     Matrix::Identity(2, 2) / 2.0, 1e-12);
  EXPECT_THROW(measure_channel(zero, ProjectiveBasis::computational(3).to_povm()), std::invalid_argument);
}

TEST(MeasureChannel, OutputDimensionIsOutcomeCount) {
  RandomSource rng(42);
  const auto out = measure_channel(random_density({2}, 2, rng), trine());
  EXPECT_EQ(out.dims(), (Dims{3}));
  EXPECT_NEAR(out.data().trace().real(), 1.0, 1e-12);
}

TEST(Dephase, DiagonalStateInOwnBasisUnchanged) {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 0.5, 0.3, 0.2;
  const DensityMatrix rho({3}, d);
  expect_matrix_near(dephase(rho, ProjectiveBasis::computational(3), 0).data(), d, 1e-15);

  // Same state rotated, dephased in the rotated basis.
  RandomSource rng(43);
  const Matrix u = random_unitary(3, rng);
  const DensityMatrix rotated({3}, u * d * u.adjoint());
  expect_matrix_near(dephase(rotated, ProjectiveBasis(u), 0).data(), rotated.data(), 1e-12);
}

TEST(Dephase, ClassicalCoinUnchanged) {
  const auto coin = states::classical_coin();
  const auto comp = ProjectiveBasis::computational(2);
  expect_matrix_near(dephase(dephase(coin, comp, 0), comp, 1).data(), coin.data(), 1e-15);
}

TEST(Dephase, BellStateMatchesProjectorSum) {
  const auto bell = states::phi_plus().density();
  const auto comp = ProjectiveBasis::computational(2);
  const Matrix result = dephase(dephase(bell, comp, 0), comp, 1).data();
  std::vector<Matrix> projectors;
  for (int k = 0; k < 4; ++k) projectors.push_back(states::projector(states::ket(4, k)));
  expect_matrix_near(result, projector_sum(bell.data(), projectors), 1e-15);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  expect_matrix_near(result, expected, 1e-15);
}

TEST(Dephase, MatchesProjectorSumForRandomBases) {
  RandomSource rng(44);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_density({2, 3}, 1 + i % 6, rng);
    const ProjectiveBasis basis(random_unitary(3, rng));
    std::vector<Matrix> projectors;
    for (int x = 0; x < 3; ++x) projectors.push_back(kron(Matrix::Identity(2, 2), basis.projector(x)));
    expect_matrix_near(dephase(rho, basis, 1).data(), projector_sum(rho.data(), projectors), 1e-12);
  }
}

TEST(Dephase, Errors) {
  const auto bell = states::phi_plus().density();
  EXPECT_THROW(dephase(bell, ProjectiveBasis::computational(2), 2), std::invalid_argument);
  EXPECT_THROW(dephase(bell, ProjectiveBasis::computational(3), 0), std::invalid_argument);
}

TEST(LocalMeasure, MeasuringBLeavesAUnchanged) {
  RandomSource rng(45);
  const auto a = random_density({2}, 2, rng);
  const auto rho = tensor(a, random_density({3}, 3, rng));
  const ProjectiveBasis basis(random_unitary(3, rng));
  const auto out = local_measure(rho, {std::nullopt, basis.to_povm()});
  expect_matrix_near(partial_trace(out, {0}).data(), a.data(), 1e-12);
}

TEST(LocalMeasure, BellBothSidesComputational) {
  const auto comp = ProjectiveBasis::computational(2).to_povm();
  const auto out = local_measure(states::phi_plus().density(), {comp, comp});
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  expect_matrix_near(out.data(), expected, 1e-15);
}

TEST(LocalMeasure, PassThrough) {
  RandomSource rng(46);
  const auto rho = random_density({2, 2}, 3, rng);
  expect_matrix_near(local_measure(rho, {std::nullopt, std::nullopt}).data(), rho.data(), 0.0);
}

TEST(LocalMeasure, SingleSideMatchesEnsembleForm) {
  // sum_x p_x rho_x^A (x) |x><x| with p_x rho_x^A = Tr_B[(I (x) M_x) rho].
  RandomSource rng(47);
  const auto rho = random_density({2, 2}, 4, rng);
  const Povm povm = trine();
  const auto out = local_measure(rho, {std::nullopt, povm});
  ASSERT_EQ(out.dims(), (Dims{2, 3}));
  Matrix expected = Matrix::Zero(6, 6);
  for (int x = 0; x < 3; ++x) {
    const Matrix block = oracle::trace_out_b(oracle::M4(kron(Matrix::Identity(2, 2), povm[x]) * rho.data()));
    expected += kron(block, states::projector(states::ket(3, x)));
  }
  expect_matrix_near(out.data(), expected, 1e-12);
}

TEST(LocalMeasure, Errors) {
  const auto bell = states::phi_plus().density();
  EXPECT_THROW(local_measure(bell, {std::nullopt}), std::invalid_argument);
  EXPECT_THROW(local_measure(bell, {ProjectiveBasis::computational(3).to_povm(), std::nullopt}),
               std::invalid_argument);
}

TEST(Naimark, ProjectiveBasisEmbedsToItself) {
  RandomSource rng(48);
  const ProjectiveBasis basis(random_unitary(3, rng));
  const auto dil = naimark_embed(basis.to_povm());
  EXPECT_EQ(dil.basis.dim(), 3);
  for (int x = 0; x < 3; ++x) expect_matrix_near(dil.basis.projector(x), basis.projector(x), 1e-10);
}

TEST(Naimark, TrineReproducesProbabilities) {
  const Povm povm = trine();
  const auto dil = naimark_embed(povm);
  ASSERT_EQ(dil.basis.dim(), 3);
  ASSERT_EQ(dil.isometry.rows(), 3);
  ASSERT_EQ(dil.isometry.cols(), 2);
  RandomSource rng(49);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_density({2}, 1 + i % 2, rng);
    const Matrix lifted = dil.isometry * rho.data() * dil.isometry.adjoint();
    double total = 0;
    for (int x = 0; x < 3; ++x) {
      const double direct = (povm[x] * rho.data()).trace().real();
      const double embedded = (dil.basis.projector(x) * lifted).trace().real();
      EXPECT_NEAR(direct, embedded, 1e-10);
      total += embedded;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(Naimark, RejectsHigherRankElements) {
  EXPECT_THROW(naimark_embed(Povm(2, {Matrix::Identity(2, 2)})), UnsupportedInput);
  EXPECT_THROW(naimark_embed(Povm(2, {0.5 * Matrix::Identity(2, 2), 0.5 * Matrix::Identity(2, 2)})),
               UnsupportedInput);
}

}  // namespace
}  // namespace qcorr
