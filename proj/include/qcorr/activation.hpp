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


// Measurement as an interaction with an apparatus. Each system factor S_i is
// coupled to an apparatus factor M_i prepared in |0> through
// U = C (U_S (x) I), where C copies the computational index of S_i into M_i
// and U_S = U_1 (x) ... rotates the system first. The activated state lives
// on [S_1 .. S_k, M_1 .. M_k] and is maximally correlated across S:M.
//
// Tracing out the apparatus leaves U_S rho U_S^dag dephased in the
// computational basis, i.e. rho dephased in the rotated basis {U_S^dag |k>}
// and then rotated by U_S.

#pragma once

#include <string_view>
#include <vector>

#include "qcorr/entanglement.hpp"
#include "qcorr/quantumness.hpp"

namespace qcorr {

struct InteractionUnitary {
  Dims system_dims;
  std::vector<Matrix> rotations;  // U_i per system factor
  Matrix matrix;                  // on system_dims ++ system_dims
};

struct ActivatedState {
  DensityMatrix state;  // dims system_dims ++ system_dims
  Cut cut;              // system factors on the left
};

enum class ActivationMeasure { negativity, hashing_ED };

inline std::string_view to_string(ActivationMeasure m) {
  return m == ActivationMeasure::negativity ? "negativity" : "hashing_ED";
}

/// Permutation matrix |s, m> -> |s, m + s mod d> factor by factor.
inline Matrix controlled_copy(const Dims& system_dims) {
  Dims all = system_dims;
  all.insert(all.end(), system_dims.begin(), system_dims.end());
  const int k = static_cast<int>(system_dims.size());
  const int total = total_dim(all);
  std::vector<int> order(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) order[i] = static_cast<int>(i);
  Matrix c = Matrix::Zero(total, total);
  for (int i = 0; i < total; ++i) {
    auto d = detail::digits(i, all);
    for (int f = 0; f < k; ++f) d[k + f] = (d[k + f] + d[f]) % system_dims[f];
    c(detail::compose(d, all, order), i) = 1.0;
  }
  return c;
}

namespace detail {

inline Matrix kron_all(const std::vector<Matrix>& factors) {
  Matrix us = Matrix::Identity(1, 1);
  for (const auto& u : factors) us = kron(us, u);
  return us;
}

inline Matrix interaction_matrix(const Dims& system_dims, const std::vector<Matrix>& rotations) {
  const int ds = total_dim(system_dims);
  return controlled_copy(system_dims) * kron(kron_all(rotations), Matrix::Identity(ds, ds));
}

inline Matrix activate_raw(const Matrix& rho, const Matrix& interaction) {
  const auto ds = rho.rows();
  Matrix input = Matrix::Zero(ds * ds, ds * ds);
  // rho (x) |0><0| places rho on the rows/columns whose apparatus index is 0.
  for (Eigen::Index i = 0; i < ds; ++i)
    for (Eigen::Index j = 0; j < ds; ++j) input(i * ds, j * ds) = rho(i, j);
  return interaction * input * interaction.adjoint();
}

// Closed form of U (rho (x) |0><0|) U^dag for U = C (U_S (x) I):
// sum_ij (U_S rho U_S^dag)_ij |i i><j j|.
inline Matrix activate_rotated(const Matrix& rho, const Matrix& us) {
  const auto ds = rho.rows();
  const Matrix r = us * rho * us.adjoint();
  Matrix out = Matrix::Zero(ds * ds, ds * ds);
  for (Eigen::Index i = 0; i < ds; ++i)
    for (Eigen::Index j = 0; j < ds; ++j) out(i * ds + i, j * ds + j) = r(i, j);
  return out;
}

inline Cut system_cut(int factors) {
  Cut cut;
  cut.left.clear();
  for (int f = 0; f < factors; ++f) cut.left.push_back(f);
  return cut;
}

inline Dims doubled(const Dims& dims) {
  Dims all = dims;
  all.insert(all.end(), dims.begin(), dims.end());
  return all;
}

}  // namespace detail

inline InteractionUnitary build_interaction(const Dims& system_dims, std::vector<Matrix> rotations) {
  if (rotations.size() != system_dims.size())
    throw std::invalid_argument("build_interaction: need one rotation per system factor");
  for (std::size_t f = 0; f < rotations.size(); ++f) {
    const auto& u = rotations[f];
    if (u.rows() != system_dims[f] || u.cols() != system_dims[f])
      throw std::invalid_argument("build_interaction: rotation has wrong dimension");
    const double err = max_abs(u * u.adjoint() - Matrix::Identity(u.rows(), u.cols()));
    if (err > tolerance::kHermitian)
      throw std::invalid_argument("build_interaction: rotation is not unitary");
  }
  Matrix m = detail::interaction_matrix(system_dims, rotations);
  return {system_dims, std::move(rotations), std::move(m)};
}

/// U (rho (x) |0><0|_M) U^dag.
inline ActivatedState activate(const DensityMatrix& rho, const InteractionUnitary& interaction) {
  if (rho.dims() != interaction.system_dims)
    throw std::invalid_argument("activate: state dims do not match the interaction");
  const int k = rho.num_subsystems();
  return {DensityMatrix::unchecked(detail::doubled(rho.dims()),
                                   detail::activate_raw(rho.data(), interaction.matrix)),
          detail::system_cut(k)};
}

namespace detail {

// Per-factor basis angles; the rotation is the adjoint of the basis so that
// the rotated basis U^dag |k> is the parametrized basis.
struct RotationParametrization {
  Dims dims;

  int size() const {
    int n = 0;
    for (int d : dims) n += basis_parameter_count(d);
    return n;
  }

  std::vector<Matrix> bases(std::span<const double> x) const {
    std::vector<Matrix> out;
    std::size_t offset = 0;
    for (int d : dims) {
      const int c = basis_parameter_count(d);
      out.push_back(basis_from_parameters(d, x.subspan(offset, c)));
      offset += c;
    }
    return out;
  }

  std::vector<Matrix> rotations(std::span<const double> x) const {
    auto b = bases(x);
    for (auto& m : b) m.adjointInPlace();
    return b;
  }
};

inline std::vector<double> marginal_rotation_seed(const DensityMatrix& rho) {
  std::vector<double> seed;
  for (int f = 0; f < rho.num_subsystems(); ++f) {
    const auto s = basis_to_parameters(eigensystem(partial_trace(rho.data(), rho.dims(), {f})).vectors);
    seed.insert(seed.end(), s.begin(), s.end());
  }
  return seed;
}

}  // namespace detail

/// Q_E: min over local rotations of the chosen entanglement measure of the
/// activated state across S:M. The hashing measure uses distillable_max_corr,
/// exact on activated states because they are maximally correlated.
inline QuantumnessValue min_activated_entanglement(const DensityMatrix& rho, ActivationMeasure measure,
                                                   const OptimizerConfig& config = {}) {
  if (rho.dim() > 16) throw std::invalid_argument("min_activated_entanglement: total dimension must be <= 16");
  const detail::RotationParametrization param{rho.dims()};
  const Dims all = detail::doubled(rho.dims());
  const Cut cut = detail::system_cut(rho.num_subsystems());

  auto objective = [&](const std::vector<double>& x) {
    const Matrix us = detail::kron_all(param.rotations(x));
    const DensityMatrix activated =
        DensityMatrix::unchecked(all, detail::activate_rotated(rho.data(), us));
    return measure == ActivationMeasure::negativity ? negativity(activated, cut).bits
                                                    : distillable_max_corr(activated, cut).bits;
  };
  auto best = multistart_minimize(objective, param.size(), config, {detail::marginal_rotation_seed(rho)});

  QuantumnessValue out;
  out.bits = std::max(0.0, best.value);
  for (auto& b : param.bases(best.parameters)) out.bases.push_back(ProjectiveBasis::unchecked(b));
  out.diagnostics = std::move(best);
  return out;
}

struct ZeroWayEquivalence {
  double zero_way_deficit = 0.0;  // via local dephasing
  double min_distillable = 0.0;   // via activation + hashing
  double residual = 0.0;
};

/// |Delta_0(rho) - min_U E_D(activated)| with the two sides computed by
/// separate code paths.
inline ZeroWayEquivalence zero_way_equivalence(const DensityMatrix& rho, const OptimizerConfig& config = {}) {
  detail::require_bipartite(rho, "zero_way_equivalence");
  ZeroWayEquivalence out;
  out.zero_way_deficit = zero_way_deficit(rho, config).bits;
  out.min_distillable = min_activated_entanglement(rho, ActivationMeasure::hashing_ED, config).bits;
  out.residual = std::abs(out.zero_way_deficit - out.min_distillable);
  return out;
}

enum class Verdict { CLASSICAL, NONCLASSICAL, INCONCLUSIVE };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CLASSICAL: return "CLASSICAL";
    case Verdict::NONCLASSICAL: return "NONCLASSICAL";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

inline constexpr double kSeparableThreshold = 1e-6;
inline constexpr double kEntangledThreshold = 1e-4;

struct SeparabilityVerdict {
  Verdict verdict = Verdict::INCONCLUSIVE;
  double min_negativity = 0.0;
  bool cc_classical = false;  // is_classical(CC) cross-check
  bool consistent = false;    // verdict agrees with the cross-check
};

/// Classical iff some local rotation makes the activated state separable:
/// CLASSICAL when the minimized activated negativity is <= 1e-6,
/// NONCLASSICAL when it exceeds 1e-4, INCONCLUSIVE in between.
inline SeparabilityVerdict classicality_separability_test(const DensityMatrix& rho,
                                                          const OptimizerConfig& config = {}) {
  detail::require_bipartite(rho, "classicality_separability_test");
  SeparabilityVerdict out;
  out.min_negativity = min_activated_entanglement(rho, ActivationMeasure::negativity, config).bits;
  if (out.min_negativity <= kSeparableThreshold) out.verdict = Verdict::CLASSICAL;
  else if (out.min_negativity > kEntangledThreshold) out.verdict = Verdict::NONCLASSICAL;
  out.cc_classical = is_classical(rho, Classicality::CC, Side::A, config).classical;
  out.consistent = out.verdict == Verdict::INCONCLUSIVE ||
                   (out.verdict == Verdict::CLASSICAL) == out.cc_classical;
  return out;
}

}  // namespace qcorr
