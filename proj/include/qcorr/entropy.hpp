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


// Entropic functionals. Every value is in bits (log base 2).

#pragma once

#include <cmath>
#include <limits>
#include <span>

#include "qcorr/hilbert.hpp"

namespace qcorr {

/// Entropy of a spectrum after clipping, with 0 log 0 = 0.
inline double spectral_entropy(const RealVector& eigenvalues) {
  double s = 0.0;
  for (double l : clip_spectrum(eigenvalues))
    if (l > 0.0) s -= l * std::log2(l);
  return s;
}

inline double shannon(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

inline double binary_entropy(double p) {
  const double q[2] = {p, 1.0 - p};
  return shannon(q);
}

inline double von_neumann(const Matrix& rho) { return spectral_entropy(eigenvalues(rho)); }

/// S(rho) = -Tr rho log2 rho.
inline double von_neumann(const DensityMatrix& rho) { return von_neumann(rho.data()); }

/// S(rho || sigma) = Tr rho (log2 rho - log2 sigma). Returns +infinity when
/// rho puts more than 1e-9 of its weight outside the support of sigma.
inline double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("relative_entropy: dimension mismatch");
  const auto [w, v] = eigensystem(sigma.data());
  const Matrix rotated = v.adjoint() * rho.data() * v;
  double outside = 0.0;
  double cross = 0.0;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    const double weight = rotated(k, k).real();
    if (w[k] > tolerance::kRank) {
      cross -= weight * std::log2(w[k]);
    } else {
      outside += weight;
    }
  }
  if (outside > tolerance::kSupport) return std::numeric_limits<double>::infinity();
  return cross - von_neumann(rho);
}

namespace detail {
inline std::pair<std::vector<int>, std::vector<int>> sides(const Cut& cut, int n) {
  auto left = normalized_subset(cut.left, n);
  auto right = complement(left, n);
  if (left.empty() || right.empty())
    throw std::invalid_argument("cut must split the state into two nonempty parts");
  return {std::move(left), std::move(right)};
}
}  // namespace detail

/// I(L:R) = S(L) + S(R) - S(LR) on raw data.
inline double mutual_information(const Matrix& rho, const Dims& dims, const Cut& cut = {}) {
  const auto [left, right] = detail::sides(cut, static_cast<int>(dims.size()));
  return von_neumann(partial_trace(rho, dims, left)) +
         von_neumann(partial_trace(rho, dims, right)) - von_neumann(rho);
}

inline double mutual_information(const DensityMatrix& rho, const Cut& cut = {}) {
  return mutual_information(rho.data(), rho.dims(), cut);
}

/// S(L|R) = S(LR) - S(R).
inline double conditional_entropy(const DensityMatrix& rho, const Cut& cut = {}) {
  const auto [left, right] = detail::sides(cut, rho.num_subsystems());
  return von_neumann(rho) - von_neumann(partial_trace(rho.data(), rho.dims(), right));
}

/// I(L>R) = -S(L|R). Lower bound on distillable entanglement.
inline double coherent_information(const DensityMatrix& rho, const Cut& cut = {}) {
  return -conditional_entropy(rho, cut);
}

/// Quantum Jensen-Shannon divergence S(mu) - (S(psi) + S(phi))/2 with
/// mu = (psi + phi)/2. For pure arguments the second term vanishes.
inline double jensen_shannon(const PureState& psi, const PureState& phi) {
  if (psi.dim() != phi.dim()) throw std::invalid_argument("jensen_shannon: dimension mismatch");
  const Matrix p = psi.amps() * psi.amps().adjoint();
  const Matrix q = phi.amps() * phi.amps().adjoint();
  return von_neumann(Matrix(0.5 * (p + q))) - 0.5 * (von_neumann(p) + von_neumann(q));
}

}  // namespace qcorr
