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
using testing::test_config;

Matrix rotated_dephasing(const DensityMatrix& rho, const std::vector<Matrix>& rotations) {
  // sum_kl (P_k (x) P_l) rho (P_k (x) P_l) with P = U^dag |k><k| U.
  Matrix out = rho.data();
  for (std::size_t f = 0; f < rotations.size(); ++f)
    out = dephase(DensityMatrix::unchecked(rho.dims(), out),
                  ProjectiveBasis(rotations[f].adjoint()), static_cast<int>(f))
              .data();
  return out;
}

double bell_diagonal_weight_for_deficit(double target) {
  // 1 - h(q) = target on q in [1/2, 1].
  double lo = 0.5, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (1.0 - oracle::binary_entropy(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

TEST(Interaction, IdentityRotationIsCnot) {
  const auto u = build_interaction({2}, {Matrix::Identity(2, 2)});
  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(3, 2) = cnot(2, 3) = 1.0;
  expect_matrix_near(u.matrix, cnot, 0.0);
}

TEST(Interaction, UnitaryForRandomRotations) {
  RandomSource rng(120);
  for (int i = 0; i < 50; ++i) {
    const auto u = build_interaction({2, 2}, {random_unitary(2, rng), random_unitary(2, rng)});
    EXPECT_LE(max_abs(u.matrix * u.matrix.adjoint() - Matrix::Identity(16, 16)), 1e-12);
  }
}

TEST(Interaction, CopiesRotatedBasis) {
  RandomSource rng(121);
  const Matrix ua = random_unitary(2, rng), ub = random_unitary(2, rng);
  const auto u = build_interaction({2, 2}, {ua, ub});
  const Matrix basis = kron(ua, ub).adjoint();
  for (int k = 0; k < 4; ++k) {
    const Vector in = kron(Vector(basis.col(k)), states::ket(4, 0));
    // U_S takes the rotated vector to |k>, then the copy writes k into M.
    const Vector expected = kron(states::ket(4, k), states::ket(4, k));
    EXPECT_LE((u.matrix * in - expected).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Interaction, Errors) {
  EXPECT_THROW(build_interaction({2, 2}, {Matrix::Identity(2, 2)}), std::invalid_argument);
  EXPECT_THROW(build_interaction({2}, {Matrix::Identity(3, 3)}), std::invalid_argument);
  EXPECT_THROW(build_interaction({2}, {Matrix::Ones(2, 2)}), std::invalid_argument);
  const auto u = build_interaction({2}, {Matrix::Identity(2, 2)});
  EXPECT_THROW(activate(DensityMatrix::maximally_mixed({2, 2}), u), std::invalid_argument);
}

TEST(Activate, PlusStateBecomesBellPair) {
  const DensityMatrix plus({2}, states::projector(states::plus_ket()));
  const auto out = activate(plus, build_interaction({2}, {Matrix::Identity(2, 2)}));
  expect_matrix_near(out.state.data(), states::phi_plus().density().data(), 1e-15);
  EXPECT_NEAR(negativity(out.state, out.cut).bits, 0.5, 1e-12);
  EXPECT_NEAR(distillable_max_corr(out.state, out.cut).bits, 1.0, 1e-12);
}

TEST(Activate, ClassicalInputInOwnBasisIsSeparable) {
  RandomSource rng(122);
  for (int i = 0; i < 10; ++i) {
    const Matrix ua = random_unitary(2, rng), ub = random_unitary(2, rng);
    Matrix rho = Matrix::Zero(4, 4);
    for (int k = 0; k < 4; ++k) {
      const Vector v = kron(Vector(ua.col(k / 2)), Vector(ub.col(k % 2)));
      rho += (k + 1) / 10.0 * v * v.adjoint();
    }
    const auto out = activate(DensityMatrix({2, 2}, rho), build_interaction({2, 2}, {ua.adjoint(), ub.adjoint()}));
    EXPECT_NEAR(negativity(out.state, out.cut).bits, 0.0, 1e-12);
    EXPECT_TRUE(is_ppt(out.state, out.cut));
  }
}

TEST(Activate, MaximallyCorrelatedForAnyInputAndRotation) {
  RandomSource rng(123);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_density({2, 2}, 1 + i % 4, rng);
    const auto out = activate(rho, build_interaction({2, 2}, {random_unitary(2, rng), random_unitary(2, rng)}));
    EXPECT_LE(max_corr_violation(out.state.data(), out.state.dims(), out.cut), 1e-10);
    EXPECT_FALSE(check_density(out.state.dims(), out.state.data()).has_value());
  }
}

TEST(Activate, ApparatusTraceIsRotatedDephasing) {
  RandomSource rng(124);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_density({2, 2}, 1 + i % 4, rng);
    const std::vector<Matrix> rotations{random_unitary(2, rng), random_unitary(2, rng)};
    const auto out = activate(rho, build_interaction({2, 2}, rotations));
    const Matrix system = partial_trace(out.state, {0, 1}).data();
    const Matrix us = kron(rotations[0], rotations[1]);
    // Tr_M gives the dephased state expressed in the rotated frame.
    expect_matrix_near(us.adjoint() * system * us, rotated_dephasing(rho, rotations), 1e-10);
    // Entropy bookkeeping behind the deficit equivalence.
    const double lhs = von_neumann(system) - von_neumann(out.state);
    const double rhs = von_neumann(rotated_dephasing(rho, rotations)) - von_neumann(rho);
    EXPECT_NEAR(lhs, rhs, 1e-10);
  }
}

TEST(Activate, ClosedFormMatchesExplicitUnitary) {
  RandomSource rng(125);
  for (int i = 0; i < 10; ++i) {
    const auto rho = random_density({2, 3}, 1 + i % 6, rng);
    const std::vector<Matrix> rotations{random_unitary(2, rng), random_unitary(3, rng)};
    const auto out = activate(rho, build_interaction({2, 3}, rotations));
    expect_matrix_near(detail::activate_rotated(rho.data(), detail::kron_all(rotations)), out.state.data(), 1e-12);
  }
}

TEST(MinActivated, ClassicalClassicalIsZero) {
  RandomSource rng(126);
  for (int i = 0; i < 3; ++i) {
    const auto rho = testing::random_classical_classical(rng);
    EXPECT_LE(min_activated_entanglement(rho, ActivationMeasure::negativity, test_config()).bits, 1e-6);
    EXPECT_LE(min_activated_entanglement(rho, ActivationMeasure::hashing_ED, test_config()).bits, 1e-6);
  }
}

TEST(MinActivated, BellHashingIsOne) {
  const auto bell = states::phi_plus().density();
  EXPECT_NEAR(min_activated_entanglement(bell, ActivationMeasure::hashing_ED, test_config()).bits, 1.0, 1e-6);
  EXPECT_NEAR(oracle::grid_product_measurements(bell.data(), 6).zero_way_deficit, 1.0, 1e-10);
}

TEST(MinActivated, DiscordantStatesActivate) {
  RandomSource rng(127);
  for (int i = 0; i < 3; ++i) {
    const auto rho = random_density({2, 2}, 2 + i % 3, rng);
    ASSERT_GT(discord(rho, Side::A, test_config()).bits, 1e-3);
    EXPECT_GT(min_activated_entanglement(rho, ActivationMeasure::negativity, test_config()).bits, 1e-4);
  }
}

TEST(MinActivated, BoundedBelowBySystemNegativity) {
  RandomSource rng(128);
  for (int i = 0; i < 5; ++i) {
    const auto rho = random_density({2, 2}, 1 + i % 4, rng);
    EXPECT_GE(min_activated_entanglement(rho, ActivationMeasure::negativity, test_config()).bits,
              negativity(rho).bits - 1e-6);
  }
}

TEST(MinActivated, LocalUnitaryInvariance) {
  RandomSource rng(129);
  const auto rho = random_density({2, 2}, 3, rng);
  const Matrix u = kron(random_unitary(2, rng), random_unitary(2, rng));
  const DensityMatrix rotated = DensityMatrix::unchecked({2, 2}, u * rho.data() * u.adjoint());
  EXPECT_NEAR(min_activated_entanglement(rho, ActivationMeasure::negativity, test_config()).bits,
              min_activated_entanglement(rotated, ActivationMeasure::negativity, test_config(3)).bits, 2e-4);
}

TEST(MinActivated, RejectsLargeSystems) {
  EXPECT_THROW(min_activated_entanglement(DensityMatrix::maximally_mixed({3, 3, 2}), ActivationMeasure::negativity),
               std::invalid_argument);
}

TEST(ZeroWayEquivalence, Examples) {
  RandomSource rng(130);
  const auto cc = zero_way_equivalence(testing::random_classical_classical(rng), test_config());
  EXPECT_LE(cc.residual, 1e-6);
  const auto bell = zero_way_equivalence(states::phi_plus().density(), test_config());
  EXPECT_NEAR(bell.zero_way_deficit, 1.0, 1e-6);
  EXPECT_NEAR(bell.min_distillable, 1.0, 1e-6);
  EXPECT_LE(bell.residual, 1e-4);
}

TEST(ZeroWayEquivalence, RandomStates) {
  RandomSource rng(131);
  for (int i = 0; i < 5; ++i) {
    const auto r = zero_way_equivalence(random_density({2, 2}, 1 + i % 4, rng), test_config(i));
    EXPECT_LE(r.residual, 2e-4) << r.zero_way_deficit << " vs " << r.min_distillable;
  }
}

TEST(SeparabilityTest, ClassicalCoin) {
  const auto v = classicality_separability_test(states::classical_coin(), test_config());
  EXPECT_EQ(v.verdict, Verdict::CLASSICAL);
  EXPECT_TRUE(v.cc_classical);
  EXPECT_TRUE(v.consistent);
}

TEST(SeparabilityTest, BellDiagonalWithKnownDeficit) {
  const double q = bell_diagonal_weight_for_deficit(0.3);
  const Matrix m = q * states::phi_plus().density().data() + (1 - q) * states::phi_minus().density().data();
  const DensityMatrix rho({2, 2}, m);
  EXPECT_NEAR(oracle::grid_product_measurements(m, 10).zero_way_deficit, 0.3, 1e-3);
  EXPECT_NEAR(zero_way_deficit(rho, test_config()).bits, 0.3, 1e-6);
  const auto v = classicality_separability_test(rho, test_config());
  EXPECT_EQ(v.verdict, Verdict::NONCLASSICAL);
  EXPECT_TRUE(v.consistent);
}

TEST(SeparabilityTest, QuantumCoin) {
  const auto v = classicality_separability_test(states::quantum_coin(), test_config());
  EXPECT_EQ(v.verdict, Verdict::NONCLASSICAL);
  EXPECT_FALSE(v.cc_classical);
  EXPECT_TRUE(v.consistent);
}

}  // namespace
}  // namespace qcorr
