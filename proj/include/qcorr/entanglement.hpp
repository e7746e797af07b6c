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


// Entanglement quantifiers: entanglement entropy, two-qubit entanglement of
// formation from the concurrence, ensemble-optimized entanglement of
// formation, negativity / PPT, distillable entanglement of maximally
// correlated states and the pure-state relative entropy of entanglement.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/optimizer.hpp"
#include "qcorr/parametrization.hpp"

namespace qcorr {

enum class EntanglementMethod { wootters, ensemble_opt, negativity, hashing, pure_exact };

inline std::string_view to_string(EntanglementMethod m) {
  switch (m) {
    case EntanglementMethod::wootters: return "wootters";
    case EntanglementMethod::ensemble_opt: return "ensemble_opt";
    case EntanglementMethod::negativity: return "negativity";
    case EntanglementMethod::hashing: return "hashing";
    case EntanglementMethod::pure_exact: return "pure_exact";
  }
  return "unknown";
}

struct Ensemble {
  std::vector<double> weights;
  std::vector<PureState> states;

  Matrix average() const {
    Matrix out = Matrix::Zero(states.front().dim(), states.front().dim());
    for (std::size_t i = 0; i < states.size(); ++i)
      out += weights[i] * states[i].amps() * states[i].amps().adjoint();
    return out;
  }
};

struct EntanglementValue {
  double bits = 0.0;
  EntanglementMethod method = EntanglementMethod::pure_exact;
  std::optional<double> concurrence;
  std::optional<Ensemble> ensemble;          // ensemble_opt only
  std::optional<OptimizerResult> diagnostics; // ensemble_opt only
};

// ---------------------------------------------------------------------------
// pure states

/// Entropy of the reduced state of a Schmidt vector on one side of `cut`.
inline double entanglement_entropy_raw(const Vector& psi, const Dims& dims, const Cut& cut) {
  const auto s = schmidt(PureState::normalized(dims, psi), cut).coefficients;
  RealVector p = s.cwiseAbs2();
  return spectral_entropy(p);
}

inline EntanglementValue entanglement_entropy(const PureState& psi, const Cut& cut = {}) {
  return {entanglement_entropy_raw(psi.amps(), psi.dims(), cut), EntanglementMethod::pure_exact,
          std::nullopt, std::nullopt, std::nullopt};
}

/// For pure states the relative entropy of entanglement is the entanglement
/// entropy.
inline EntanglementValue relative_entanglement_pure(const PureState& psi, const Cut& cut = {}) {
  return entanglement_entropy(psi, cut);
}

// ---------------------------------------------------------------------------
// two qubits

inline void require_two_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.dims() != Dims{2, 2})
    throw std::invalid_argument(std::string(what) + ": expected a two-qubit state");
}

/// Concurrence max(0, l1 - l2 - l3 - l4), l_i the decreasing square roots of
/// the eigenvalues of rho (sy x sy) rho* (sy x sy). With rho = Psi Psi^dag
/// over its support, the l_i are the singular values of
/// Psi^T (sy x sy) Psi.
inline double concurrence(const Matrix& rho) {
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = 1.0;
  const auto [w, v] = eigensystem(rho);
  std::vector<int> support;
  for (int i = 0; i < 4; ++i)
    if (w[i] > 1e-14) support.push_back(i);
  if (support.empty()) return 0.0;
  Matrix psi(4, support.size());
  for (std::size_t k = 0; k < support.size(); ++k)
    psi.col(k) = std::sqrt(w[support[k]]) * v.col(support[k]);
  const Matrix tau = psi.transpose() * yy * psi;
  const RealVector sv = Eigen::JacobiSVD<Matrix>(tau).singularValues();
  std::vector<double> l(4, 0.0);
  for (Eigen::Index i = 0; i < sv.size(); ++i) l[i] = sv[i];
  std::sort(l.rbegin(), l.rend());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

inline double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

inline EntanglementValue eof_two_qubits(const DensityMatrix& rho) {
  require_two_qubits(rho, "eof_two_qubits");
  const double c = concurrence(rho.data());
  return {eof_from_concurrence(c), EntanglementMethod::wootters, c, std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------
// partial transpose

/// Transposes the listed subsystems.
inline Matrix partial_transpose(const Matrix& rho, const Dims& dims, std::vector<int> which) {
  which = detail::normalized_subset(std::move(which), static_cast<int>(dims.size()));
  const int total = total_dim(dims);
  // A flat index is sum_k digit_k * stride_k, so it splits additively into
  // the part carried by the transposed subsystems and the rest.
  std::vector<int> moved(total);
  for (int i = 0; i < total; ++i) {
    const auto d = detail::digits(i, dims);
    int stride = 1, part = 0;
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
      if (std::binary_search(which.begin(), which.end(), k)) part += d[k] * stride;
      stride *= dims[k];
    }
    moved[i] = part;
  }
  Matrix out(total, total);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j)
      out(i - moved[i] + moved[j], j - moved[j] + moved[i]) = rho(i, j);
  return out;
}

inline std::vector<int> right_side(const Cut& cut, int n) {
  return detail::sides(cut, n).second;
}

/// (||rho^{T_R}||_1 - 1) / 2 with R the right side of `cut`.
inline double negativity_raw(const Matrix& rho, const Dims& dims, const Cut& cut = {}) {
  const Matrix pt = partial_transpose(rho, dims, right_side(cut, static_cast<int>(dims.size())));
  return std::max(0.0, (trace_norm(pt) - 1.0) / 2.0);
}

inline EntanglementValue negativity(const DensityMatrix& rho, const Cut& cut = {}) {
  return {negativity_raw(rho.data(), rho.dims(), cut), EntanglementMethod::negativity,
          std::nullopt, std::nullopt, std::nullopt};
}

inline bool is_ppt(const DensityMatrix& rho, const Cut& cut = {}) {
  const Matrix pt =
      partial_transpose(rho.data(), rho.dims(), right_side(cut, rho.num_subsystems()));
  return eigenvalues(pt).minCoeff() >= -tolerance::kPsd;
}

// ---------------------------------------------------------------------------
// maximally correlated states

/// Largest entry of rho outside the maximally correlated pattern (ii, jj)
/// across `cut`. Both sides must have equal dimension.
inline double max_corr_violation(const Matrix& rho, const Dims& dims, const Cut& cut = {}) {
  const auto [left, right] = detail::sides(cut, static_cast<int>(dims.size()));
  const int dl = total_dim(detail::select(dims, left));
  const int dr = total_dim(detail::select(dims, right));
  if (dl != dr) return std::numeric_limits<double>::infinity();
  std::vector<int> order = left;
  order.insert(order.end(), right.begin(), right.end());
  const bool identity = std::is_sorted(order.begin(), order.end());
  const Matrix m = identity ? rho : permute(rho, dims, order);
  double worst = 0.0;
  for (int i = 0; i < dl * dr; ++i)
    for (int j = 0; j < dl * dr; ++j)
      if (i / dr != i % dr || j / dr != j % dr) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

/// E_D of a maximally correlated state through the hashing equality:
/// -S(L|R) = S(rho_R) - S(rho).
inline EntanglementValue distillable_max_corr(const DensityMatrix& rho, const Cut& cut = {}) {
  const double violation = max_corr_violation(rho.data(), rho.dims(), cut);
  if (violation > tolerance::kHermitian)
    throw UnsupportedInput("distillable_max_corr: state is not maximally correlated across the cut");
  return {std::max(0.0, coherent_information(rho, cut)), EntanglementMethod::hashing, std::nullopt,
          std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------
// ensemble optimization

/// Default ensemble size: at least the rank, and at least four elements when
/// the rank allows it (two-qubit optimal decompositions never need more).
inline int default_ensemble_size(int rank) { return std::max(rank, std::min(rank * rank, 4)); }

inline int numerical_rank(const Matrix& rho) {
  const RealVector w = eigenvalues(rho);
  return static_cast<int>((w.array() > tolerance::kRank).count());
}

namespace detail {

// Average entanglement of the ensemble induced by measuring the purifying
// environment with the isometry rows: phi_x = Psi V^T e_x.
struct EnsembleObjective {
  Matrix psi;  // N x r purification, psi(i, e)
  Dims dims;
  Cut cut;
  int outcomes;

  Matrix unnormalized_states(std::span<const double> params) const {
    const Matrix v = unitary_from_parameters(outcomes, params).leftCols(psi.cols());
    return psi * v.transpose();
  }

  double operator()(const std::vector<double>& params) const {
    const Matrix phi = unnormalized_states(params);
    double total = 0.0;
    for (int x = 0; x < outcomes; ++x) {
      const double p = phi.col(x).squaredNorm();
      if (p <= 1e-14) continue;
      total += p * entanglement_entropy_raw(phi.col(x) / std::sqrt(p), dims, cut);
    }
    return total;
  }
};

}  // namespace detail

/// Upper bound on E_f from the best ensemble generated by an `ensemble_size`
/// outcome rank-1 measurement on the purification environment (every
/// decomposition of rho arises this way). `ensemble_size` 0 selects
/// default_ensemble_size(rank).
inline EntanglementValue eof_ensemble_opt(const DensityMatrix& rho, int ensemble_size = 0,
                                          const OptimizerConfig& config = {},
                                          const Cut& cut = {}) {
  if (rho.dim() > 16) throw std::invalid_argument("eof_ensemble_opt: total dimension must be <= 16");
  const PureState purification = purify(rho);
  const int rank = purification.dims().back();
  const int n = ensemble_size == 0 ? default_ensemble_size(rank) : ensemble_size;
  if (n < rank) throw std::invalid_argument("eof_ensemble_opt: ensemble size below rank");

  detail::EnsembleObjective objective;
  objective.psi = Matrix(rho.dim(), rank);
  for (int i = 0; i < rho.dim(); ++i)
    for (int e = 0; e < rank; ++e) objective.psi(i, e) = purification.amps()[i * rank + e];
  objective.dims = rho.dims();
  objective.cut = cut;
  objective.outcomes = n;

  OptimizerResult best;
  if (n == 1) {
    best.value = objective({0.0});
    best.parameters = {0.0};
    best.best_restart = 0;
    best.restart_values = {best.value};
  } else {
    best = multistart_minimize(std::cref(objective), n * n, config,
                               {std::vector<double>(n * n, 0.0)});
  }

  Ensemble ensemble;
  const Matrix phi = objective.unnormalized_states(best.parameters);
  for (int x = 0; x < n; ++x) {
    const double p = phi.col(x).squaredNorm();
    if (p <= 1e-14) continue;
    ensemble.weights.push_back(p);
    ensemble.states.push_back(PureState::normalized(rho.dims(), phi.col(x)));
  }
  return {std::max(0.0, best.value), EntanglementMethod::ensemble_opt, std::nullopt,
          std::move(ensemble), std::move(best)};
}

}  // namespace qcorr
