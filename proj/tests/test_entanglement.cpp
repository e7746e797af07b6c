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

using testing::test_config;

PureState unequal_pair() {
  Vector v = Vector::Zero(4);
  v[0] = std::sqrt(3.0) / 2.0;
  v[3] = 0.5;
  return PureState({2, 2}, v);
}

TEST(EntanglementEntropy, Examples) {
  RandomSource rng(50);
  const auto product = tensor(random_pure({2}, rng), random_pure({2}, rng));
  EXPECT_NEAR(entanglement_entropy(product).bits, 0.0, 1e-10);
  EXPECT_NEAR(entanglement_entropy(states::phi_plus()).bits, 1.0, 1e-12);
  EXPECT_NEAR(entanglement_entropy(unequal_pair()).bits, oracle::binary_entropy(0.75), 1e-12);
  EXPECT_NEAR(entanglement_entropy(unequal_pair()).bits, 0.811278, 1e-6);
  EXPECT_EQ(entanglement_entropy(unequal_pair()).method, EntanglementMethod::pure_exact);
}

TEST(EntanglementEntropy, EqualsMarginalEntropy) {
  RandomSource rng(51);
  for (int i = 0; i < 20; ++i) {
    const auto psi = random_pure({2, 3}, rng);
    EXPECT_NEAR(entanglement_entropy(psi).bits, oracle::entropy(partial_trace(psi.density(), {0}).data()),
                1e-10);
  }
}

TEST(RelativeEntanglementPure, EqualsEntanglementEntropy) {
  RandomSource rng(52);
  const auto product = tensor(random_pure({2}, rng), random_pure({2}, rng));
  EXPECT_NEAR(relative_entanglement_pure(product).bits, 0.0, 1e-10);
  EXPECT_NEAR(relative_entanglement_pure(states::phi_plus()).bits, 1.0, 1e-12);
  EXPECT_NEAR(relative_entanglement_pure(unequal_pair()).bits, 0.811278, 1e-6);
}

TEST(Wootters, BellState) {
  const auto v = eof_two_qubits(states::phi_plus().density());
  EXPECT_NEAR(*v.concurrence, 1.0, 1e-10);
  EXPECT_NEAR(v.bits, 1.0, 1e-10);
  EXPECT_EQ(v.method, EntanglementMethod::wootters);
}

TEST(Wootters, SeparableStatesVanish) {
  EXPECT_NEAR(eof_two_qubits(states::classical_coin()).bits, 0.0, 1e-10);
  EXPECT_NEAR(eof_two_qubits(states::quantum_coin()).bits, 0.0, 1e-10);
  RandomSource rng(53);
  for (int i = 0; i < 10; ++i)
    EXPECT_NEAR(eof_two_qubits(testing::random_classical_quantum(rng)).bits, 0.0, 1e-10);
}

TEST(Wootters, WernerState) {
  const auto v = eof_two_qubits(states::werner(0.8));
  EXPECT_NEAR(*v.concurrence, 0.7, 1e-10);
  const double expected = oracle::binary_entropy((1.0 + std::sqrt(0.51)) / 2.0);
  EXPECT_NEAR(v.bits, expected, 1e-10);
  EXPECT_NEAR(v.bits, 0.591857, 1e-6);
}

TEST(Wootters, MatchesNonHermitianOracle) {
  RandomSource rng(54);
  for (int i = 0; i < 50; ++i) {
    const auto rho = random_density({2, 2}, 1 + i % 4, rng);
    const auto v = eof_two_qubits(rho);
    EXPECT_NEAR(*v.concurrence, oracle::wootters_concurrence(rho.data()), 1e-7);
    EXPECT_NEAR(v.bits, oracle::wootters_eof(rho.data()), 1e-6);
    EXPECT_GE(v.bits, 0.0);
    EXPECT_LE(v.bits, 1.0 + 1e-12);
  }
}

TEST(Wootters, PureStateEqualsEntanglementEntropy) {
  RandomSource rng(55);
  for (int i = 0; i < 20; ++i) {
    const auto psi = random_pure({2, 2}, rng);
    EXPECT_NEAR(eof_two_qubits(psi.density()).bits, entanglement_entropy(psi).bits, 1e-8);
  }
}

TEST(Wootters, RejectsNonQubitPairs) {
  EXPECT_THROW(eof_two_qubits(DensityMatrix::maximally_mixed({2, 3})), std::invalid_argument);
  EXPECT_THROW(eof_two_qubits(DensityMatrix::maximally_mixed({4})), std::invalid_argument);
}

TEST(EnsembleOpt, PureInputIsEntanglementEntropy) {
  RandomSource rng(56);
  const auto psi = random_pure({2, 2}, rng);
  for (int n : {1, 2, 3}) {
    const auto v = eof_ensemble_opt(psi.density(), n, test_config());
    EXPECT_NEAR(v.bits, entanglement_entropy(psi).bits, 1e-8) << "n = " << n;
  }
}

TEST(EnsembleOpt, BellDiagonalRankTwoIsSeparable) {
  const Matrix rho = 0.5 * states::phi_plus().density().data() + 0.5 * states::phi_minus().density().data();
  const DensityMatrix state({2, 2}, rho);
  EXPECT_NEAR(eof_two_qubits(state).bits, 0.0, 1e-10);
  EXPECT_NEAR(eof_ensemble_opt(state, 0, test_config()).bits, 0.0, 2e-3);
}

TEST(EnsembleOpt, WernerMatchesWootters) {
  const auto rho = states::werner(0.8);
  const auto v = eof_ensemble_opt(rho, 0, test_config());
  EXPECT_NEAR(v.bits, oracle::wootters_eof(rho.data()), 2e-3);
  EXPECT_EQ(v.method, EntanglementMethod::ensemble_opt);
}

TEST(EnsembleOpt, EnsembleReconstructsTarget) {
  RandomSource rng(57);
  const auto rho = random_density({2, 2}, 2, rng);
  const auto v = eof_ensemble_opt(rho, 0, test_config());
  ASSERT_TRUE(v.ensemble.has_value());
  double total = 0.0;
  for (double w : v.ensemble->weights) total += w;
  EXPECT_NEAR(total, 1.0, 1e-8);
  EXPECT_LE(max_abs(v.ensemble->average() - rho.data()), 1e-8);
  double avg = 0.0;
  for (std::size_t i = 0; i < v.ensemble->states.size(); ++i)
    avg += v.ensemble->weights[i] * entanglement_entropy(v.ensemble->states[i]).bits;
  EXPECT_NEAR(avg, v.bits, 1e-8);
}

TEST(EnsembleOpt, UpperBoundsWootters) {
  RandomSource rng(58);
  for (int i = 0; i < 5; ++i) {
    const auto rho = random_density({2, 2}, 2 + i % 2, rng);
    EXPECT_GE(eof_ensemble_opt(rho, 0, test_config(i)).bits, oracle::wootters_eof(rho.data()) - 2e-3);
  }
}

TEST(EnsembleOpt, SizeBelowRankRejected) {
  EXPECT_THROW(eof_ensemble_opt(DensityMatrix::maximally_mixed({2, 2}), 3), std::invalid_argument);
}

TEST(EnsembleOpt, DeterministicForFixedSeed) {
  const auto rho = states::werner(0.7);
  const auto a = eof_ensemble_opt(rho, 0, test_config(9));
  const auto b = eof_ensemble_opt(rho, 0, test_config(9));
  EXPECT_EQ(a.bits, b.bits);
  EXPECT_EQ(a.diagnostics->parameters, b.diagnostics->parameters);
}

TEST(Negativity, Examples) {
  EXPECT_NEAR(negativity(states::classical_coin()).bits, 0.0, 1e-12);
  EXPECT_NEAR(negativity(DensityMatrix::maximally_mixed({2, 2})).bits, 0.0, 1e-12);
  EXPECT_NEAR(negativity(states::phi_plus().density()).bits, 0.5, 1e-12);
  // Maximally correlated mixture of |00> and |11>: separable.
  Matrix mc = Matrix::Zero(4, 4);
  mc(0, 0) = 0.3;
  mc(3, 3) = 0.7;
  EXPECT_NEAR(negativity(DensityMatrix({2, 2}, mc)).bits, 0.0, 1e-12);
}

TEST(Negativity, MatchesIndexSwapOracle) {
  RandomSource rng(59);
  for (int i = 0; i < 50; ++i) {
    const auto rho = random_density({2, 2}, 1 + i % 4, rng);
    EXPECT_NEAR(negativity(rho).bits, oracle::negativity(rho.data()), 1e-10);
  }
}

TEST(Negativity, ZeroIffPpt) {
  RandomSource rng(60);
  for (int i = 0; i < 50; ++i) {
    const auto rho = i % 2 ? random_density({2, 2}, 4, rng) : testing::random_classical_classical(rng);
    const bool zero = negativity(rho).bits <= 1e-10;
    EXPECT_EQ(zero, is_ppt(rho));
  }
}

TEST(Negativity, ProductMixturesArePpt) {
  RandomSource rng(61);
  for (int i = 0; i < 20; ++i) {
    Matrix rho = Matrix::Zero(4, 4);
    for (int k = 0; k < 3; ++k)
      rho += kron(random_density({2}, 2, rng).data(), random_density({2}, 2, rng).data()) / 3.0;
    const DensityMatrix state({2, 2}, rho);
    EXPECT_NEAR(negativity(state).bits, 0.0, 1e-10);
    EXPECT_TRUE(is_ppt(state));
  }
}

TEST(Negativity, ThreePartyCut) {
  // GHZ across A | BC: a Bell pair in disguise.
  EXPECT_NEAR(negativity(states::ghz().density(), Cut{{0}}).bits, 0.5, 1e-12);
  EXPECT_NEAR(negativity(tensor(states::phi_plus(), PureState({2}, states::ket(2, 0))).density(), Cut{{2}}).bits,
              0.0, 1e-12);
}

TEST(MaxCorr, Examples) {
  Matrix cc = Matrix::Zero(4, 4);
  cc(0, 0) = 0.4;
  cc(3, 3) = 0.6;
  EXPECT_NEAR(distillable_max_corr(DensityMatrix({2, 2}, cc)).bits, 0.0, 1e-12);
  const auto bell = distillable_max_corr(states::phi_plus().density());
  EXPECT_NEAR(bell.bits, 1.0, 1e-12);
  EXPECT_EQ(bell.method, EntanglementMethod::hashing);
}

TEST(MaxCorr, RejectsOffPatternEntries) {
  EXPECT_THROW(distillable_max_corr(DensityMatrix::maximally_mixed({2, 2})), UnsupportedInput);
  EXPECT_THROW(distillable_max_corr(DensityMatrix::maximally_mixed({2, 3})), UnsupportedInput);
}

TEST(MaxCorr, PureInputsMatchEntanglementEntropy) {
  RandomSource rng(62);
  for (int i = 0; i < 10; ++i) {
    Vector v = Vector::Zero(9);
    for (int k = 0; k < 3; ++k) v[4 * k] = rng.complex_normal();
    const auto psi = PureState::normalized({3, 3}, v);
    EXPECT_NEAR(distillable_max_corr(psi.density()).bits, entanglement_entropy(psi).bits, 1e-10);
  }
}

TEST(MaxCorr, BellCostEqualsDistillation) {
  const auto bell = states::phi_plus();
  EXPECT_NEAR(eof_two_qubits(bell.density()).bits, distillable_max_corr(bell.density()).bits, 1e-10);
}

}  // namespace
}  // namespace qcorr
