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


// Checks of the classical-correlation / entanglement-of-formation balance on
// tripartite states A, B, E (all qubits):
//
//   J(A:E) = S(A) - E_f(AB)                       for pure ABE
//   D(A:E) = E_f(AB) - S(A|E)                     for pure ABE
//   D(A:E) + D(A:B) = E_f(AE) + E_f(AB)           for pure ABE
//   E_f(AB) + J(A:C) <= S(A)                      for any ABC
//
// E_f comes from the exact two-qubit formula; J and D from the optimizer with
// measurements on the second party of each pair (E, B or C).

#pragma once

#include <cmath>
#include <cstdint>

#include "qcorr/entanglement.hpp"
#include "qcorr/quantumness.hpp"

namespace qcorr {

struct KwReport {
  double J_AE = 0, S_A = 0, Ef_AB = 0, D_AE = 0, cond_S_AE = 0;
  double J_AB = 0, Ef_AE = 0, D_AB = 0, cond_S_AB = 0;
  double residual_kw = 0, residual_e4 = 0, residual_conservation = 0;
  // Single-copy stand-in for E_C - E_D: E_f(AB) minus the hashing bound
  // max(0, I(A>B)). Not the regularized quantity.
  double single_copy_irreversibility = 0;
  bool povm_used = false;  // J needed the 3-outcome POVM search
  std::uint64_t seed = 0;
  Dims dims;
};

/// Residual above which J is recomputed with 3-outcome rank-1 POVMs.
inline constexpr double kProjectiveResidualLimit = 1e-3;

namespace detail {

inline void require_three_qubits(const PureState& psi, const char* what) {
  if (psi.dims() != Dims{2, 2, 2})
    throw std::invalid_argument(std::string(what) + ": expected a three-qubit pure state");
}

// J(X:Y) measuring Y with the projective search, falling back to POVMs when
// it misses `target` by more than the projective limit.
inline double classical_correlations_with_fallback(const DensityMatrix& rho, double target,
                                                   const OptimizerConfig& config, bool& povm_used) {
  double j = classical_correlations(rho, Side::B, config).bits;
  if (std::abs(j - target) > kProjectiveResidualLimit) {
    const double jp = classical_correlations(rho, Side::B, config, 3).bits;
    if (jp > j) {
      j = jp;
      povm_used = true;
    }
  }
  return j;
}

}  // namespace detail

/// Computes every quantity of the report for a three-qubit pure state.
inline KwReport kw_full_report(const PureState& psi, const OptimizerConfig& config = {}) {
  detail::require_three_qubits(psi, "kw_full_report");
  const DensityMatrix abe = psi.density();
  const DensityMatrix ab = partial_trace(abe, {0, 1});
  const DensityMatrix ae = partial_trace(abe, {0, 2});

  KwReport r;
  r.seed = config.seed;
  r.dims = psi.dims();
  r.S_A = von_neumann(partial_trace(abe, {0}));
  r.Ef_AB = eof_two_qubits(ab).bits;
  r.Ef_AE = eof_two_qubits(ae).bits;
  r.J_AE = detail::classical_correlations_with_fallback(ae, r.S_A - r.Ef_AB, config, r.povm_used);
  r.J_AB = detail::classical_correlations_with_fallback(ab, r.S_A - r.Ef_AE, config, r.povm_used);
  r.D_AE = std::max(0.0, mutual_information(ae) - r.J_AE);
  r.D_AB = std::max(0.0, mutual_information(ab) - r.J_AB);
  r.cond_S_AE = conditional_entropy(ae);
  r.cond_S_AB = conditional_entropy(ab);

  r.residual_kw = std::abs(r.J_AE - (r.S_A - r.Ef_AB));
  r.residual_e4 = std::abs(r.D_AE - (r.Ef_AB - r.cond_S_AE));
  r.residual_conservation = std::abs(r.D_AE + r.D_AB - r.Ef_AE - r.Ef_AB);
  r.single_copy_irreversibility = r.Ef_AB - std::max(0.0, -r.cond_S_AB);
  return r;
}

/// J(A:E) against S(A) - E_f(AB).
inline KwReport kw_balance(const PureState& psi, const OptimizerConfig& config = {}) {
  detail::require_three_qubits(psi, "kw_balance");
  const DensityMatrix abe = psi.density();
  const DensityMatrix ae = partial_trace(abe, {0, 2});
  KwReport r;
  r.seed = config.seed;
  r.dims = psi.dims();
  r.S_A = von_neumann(partial_trace(abe, {0}));
  r.Ef_AB = eof_two_qubits(partial_trace(abe, {0, 1})).bits;
  r.J_AE = detail::classical_correlations_with_fallback(ae, r.S_A - r.Ef_AB, config, r.povm_used);
  r.residual_kw = std::abs(r.J_AE - (r.S_A - r.Ef_AB));
  return r;
}

/// D(A:E) against E_f(AB) - S(A|E).
inline KwReport discord_eof_relation(const PureState& psi, const OptimizerConfig& config = {}) {
  KwReport r = kw_balance(psi, config);
  const DensityMatrix ae = partial_trace(psi.density(), {0, 2});
  r.D_AE = std::max(0.0, mutual_information(ae) - r.J_AE);
  r.cond_S_AE = conditional_entropy(ae);
  r.residual_e4 = std::abs(r.D_AE - (r.Ef_AB - r.cond_S_AE));
  return r;
}

/// D(A:E) + D(A:B) against E_f(AE) + E_f(AB).
inline KwReport conservation_law(const PureState& psi, const OptimizerConfig& config = {}) {
  return kw_full_report(psi, config);
}

/// Signed slack S(A) - E_f(AB) - J(A:C) for a state on qubits A, B, C.
/// Nonnegative up to optimizer tolerance; zero for pure inputs.
inline double monogamy_check(const DensityMatrix& abc, const OptimizerConfig& config = {}) {
  if (abc.dims() != Dims{2, 2, 2})
    throw std::invalid_argument("monogamy_check: expected three qubits");
  const double s_a = von_neumann(partial_trace(abc, {0}));
  const double ef = eof_two_qubits(partial_trace(abc, {0, 1})).bits;
  bool unused = false;
  const double j = detail::classical_correlations_with_fallback(partial_trace(abc, {0, 2}),
                                                                s_a - ef, config, unused);
  return s_a - ef - j;
}

}  // namespace qcorr
