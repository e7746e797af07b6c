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


// Quantumness of correlations for two-party states: classical correlations,
// one- and two-sided discord, one-way and zero-way work deficits (equal to
// the relative entropies of quantumness QC and CC), total work and
// classicality detection.
//
// Every optimized quantity is a one-sided bound: J is the best value found
// (a lower bound on the maximum), discord and the deficits are upper bounds
// on the minimum. Diagnostics expose the spread across restarts.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/optimizer.hpp"
#include "qcorr/parametrization.hpp"

namespace qcorr {

struct QuantumnessValue {
  double bits = 0.0;
  OptimizerResult diagnostics;
  std::vector<Povm> povms;              // optimal measurements (J, discord)
  std::vector<ProjectiveBasis> bases;   // optimal bases (deficits, classicality)
};

enum class Classicality { CQ, CC };
enum class QuantumnessVariant { QC, CC };

namespace detail {

inline void require_bipartite(const DensityMatrix& rho, const char* what) {
  if (rho.num_subsystems() != 2)
    throw std::invalid_argument(std::string(what) + ": expected a two-party state");
}

inline double clip_nonnegative(double v) { return v < 0.0 ? 0.0 : v; }

// Eigenbasis of a marginal, expressed as basis angles; used as an extra
// optimizer start because classical states are diagonal there.
inline std::vector<double> marginal_basis_seed(const DensityMatrix& rho, int side) {
  const Matrix marginal = partial_trace(rho.data(), rho.dims(), {side});
  return basis_to_parameters(eigensystem(marginal).vectors);
}

// Sum over outcomes of p_x S(rho_x) for unnormalized blocks.
inline double average_conditional_entropy(const std::vector<Matrix>& blocks) {
  double total = 0.0;
  for (const auto& b : blocks) {
    const double p = b.trace().real();
    if (p <= 1e-14) continue;
    total += p * von_neumann(Matrix(b / p));
  }
  return total;
}

struct Split {
  std::vector<double> first, second;
};

inline Split split(const std::vector<double>& params, int first) {
  return {std::vector<double>(params.begin(), params.begin() + first),
          std::vector<double>(params.begin() + first, params.end())};
}

}  // namespace detail

/// J: max over rank-1 measurements on `measured` of
/// S(rho_other) - sum_x p_x S(rho_other|x). `outcomes` 0 selects projective
/// measurements; larger values (up to d^2) search rank-1 POVMs.
inline QuantumnessValue classical_correlations(const DensityMatrix& rho, Side measured,
                                               const OptimizerConfig& config = {},
                                               int outcomes = 0) {
  detail::require_bipartite(rho, "classical_correlations");
  const int k = index_of(measured);
  const MeasurementParametrization param(rho.dims()[k], outcomes);
  const double s_other = von_neumann(partial_trace(rho.data(), rho.dims(), {1 - k}));

  auto objective = [&](const std::vector<double>& x) {
    const auto blocks = measurement_blocks(rho.data(), rho.dims(), param.elements(x), k);
    return detail::average_conditional_entropy(blocks) - s_other;
  };
  std::vector<std::vector<double>> seeds;
  if (param.projective()) seeds.push_back(detail::marginal_basis_seed(rho, k));
  auto best = multistart_minimize(objective, param.num_parameters(), config, seeds);

  QuantumnessValue out;
  out.bits = detail::clip_nonnegative(-best.value);
  out.povms.push_back(param.povm(best.parameters));
  out.diagnostics = std::move(best);
  return out;
}

/// D = I - J with J measured on `measured`, clipped at zero.
inline QuantumnessValue discord(const DensityMatrix& rho, Side measured,
                                const OptimizerConfig& config = {}, int outcomes = 0) {
  auto j = classical_correlations(rho, measured, config, outcomes);
  j.bits = detail::clip_nonnegative(mutual_information(rho) - j.bits);
  return j;
}

/// min over product measurements A (x) B of I(rho) - I(A (x) B (rho)).
inline QuantumnessValue discord_two_sided(const DensityMatrix& rho,
                                          const OptimizerConfig& config = {},
                                          int outcomes_a = 0, int outcomes_b = 0) {
  detail::require_bipartite(rho, "discord_two_sided");
  const MeasurementParametrization pa(rho.dims()[0], outcomes_a);
  const MeasurementParametrization pb(rho.dims()[1], outcomes_b);
  const double mi = mutual_information(rho);

  auto objective = [&](const std::vector<double>& x) {
    const auto [xa, xb] = detail::split(x, pa.num_parameters());
    const auto ea = pa.elements(xa);
    const auto eb = pb.elements(xb);
    std::vector<double> joint, pa_marg(ea.size(), 0.0), pb_marg(eb.size(), 0.0);
    for (std::size_t a = 0; a < ea.size(); ++a)
      for (std::size_t b = 0; b < eb.size(); ++b) {
        const double p = std::max(0.0, (kron(ea[a], eb[b]) * rho.data()).trace().real());
        joint.push_back(p);
        pa_marg[a] += p;
        pb_marg[b] += p;
      }
    return mi - (shannon(pa_marg) + shannon(pb_marg) - shannon(joint));
  };
  std::vector<std::vector<double>> seeds;
  if (pa.projective() && pb.projective()) {
    auto s = detail::marginal_basis_seed(rho, 0);
    const auto sb = detail::marginal_basis_seed(rho, 1);
    s.insert(s.end(), sb.begin(), sb.end());
    seeds.push_back(std::move(s));
  }
  auto best = multistart_minimize(objective, pa.num_parameters() + pb.num_parameters(), config, seeds);

  QuantumnessValue out;
  out.bits = detail::clip_nonnegative(best.value);
  const auto [xa, xb] = detail::split(best.parameters, pa.num_parameters());
  out.povms = {pa.povm(xa), pb.povm(xb)};
  out.diagnostics = std::move(best);
  return out;
}

/// One-way work deficit: min over projective bases on `dephased` of
/// S(dephased rho) - S(rho).
inline QuantumnessValue one_way_deficit(const DensityMatrix& rho, Side dephased = Side::B,
                                        const OptimizerConfig& config = {}) {
  detail::require_bipartite(rho, "one_way_deficit");
  const int k = index_of(dephased);
  const int d = rho.dims()[k];
  const double s = von_neumann(rho);
  auto objective = [&](const std::vector<double>& x) {
    return von_neumann(dephase(rho.data(), rho.dims(), basis_from_parameters(d, x), k)) - s;
  };
  auto best = multistart_minimize(objective, basis_parameter_count(d), config,
                                  {detail::marginal_basis_seed(rho, k)});
  QuantumnessValue out;
  out.bits = detail::clip_nonnegative(best.value);
  out.bases.push_back(ProjectiveBasis::unchecked(basis_from_parameters(d, best.parameters)));
  out.diagnostics = std::move(best);
  return out;
}

/// Zero-way work deficit: min over product projective bases of
/// S(dephased_A dephased_B rho) - S(rho).
inline QuantumnessValue zero_way_deficit(const DensityMatrix& rho, const OptimizerConfig& config = {}) {
  detail::require_bipartite(rho, "zero_way_deficit");
  const int da = rho.dims()[0], db = rho.dims()[1];
  const int na = basis_parameter_count(da);
  const double s = von_neumann(rho);
  auto objective = [&](const std::vector<double>& x) {
    const auto [xa, xb] = detail::split(x, na);
    Matrix m = dephase(rho.data(), rho.dims(), basis_from_parameters(da, xa), 0);
    m = dephase(m, rho.dims(), basis_from_parameters(db, xb), 1);
    return von_neumann(m) - s;
  };
  auto seed = detail::marginal_basis_seed(rho, 0);
  const auto seed_b = detail::marginal_basis_seed(rho, 1);
  seed.insert(seed.end(), seed_b.begin(), seed_b.end());
  auto best = multistart_minimize(objective, na + basis_parameter_count(db), config, {seed});

  QuantumnessValue out;
  out.bits = detail::clip_nonnegative(best.value);
  const auto [xa, xb] = detail::split(best.parameters, na);
  out.bases = {ProjectiveBasis::unchecked(basis_from_parameters(da, xa)),
               ProjectiveBasis::unchecked(basis_from_parameters(db, xb))};
  out.diagnostics = std::move(best);
  return out;
}

/// Relative entropy of quantumness through its work-deficit equivalence:
/// QC -> one-way deficit (classical on `side`), CC -> zero-way deficit.
inline QuantumnessValue relative_entropy_of_quantumness(const DensityMatrix& rho,
                                                        QuantumnessVariant variant,
                                                        const OptimizerConfig& config = {},
                                                        Side side = Side::B) {
  return variant == QuantumnessVariant::QC ? one_way_deficit(rho, side, config)
                                           : zero_way_deficit(rho, config);
}

/// W_t = log2 N - S(rho).
inline QuantumnessValue total_work(const DensityMatrix& rho) {
  QuantumnessValue out;
  out.bits = detail::clip_nonnegative(std::log2(double(rho.dim())) - von_neumann(rho));
  return out;
}

struct WorkDeficitBound {
  bool holds = false;
  double deficit = 0.0;  // zero-way deficit
  double bound = 0.0;    // entanglement lower bound it must dominate
  bool exact = false;    // true when the bound is E_r itself (pure input)
};

/// Checks Delta >= E_r - 1e-6. For pure inputs E_r = S(rho_A) exactly; for
/// mixed inputs the coherent information (a lower bound on E_r) is used.
inline WorkDeficitBound work_deficit_bound_check(const DensityMatrix& rho,
                                                 const OptimizerConfig& config = {}) {
  detail::require_bipartite(rho, "work_deficit_bound_check");
  WorkDeficitBound out;
  out.deficit = zero_way_deficit(rho, config).bits;
  out.exact = std::abs(purity(rho) - 1.0) <= 1e-10;
  out.bound = out.exact ? von_neumann(partial_trace(rho, {0}))
                        : std::max(0.0, coherent_information(rho));
  out.holds = out.deficit >= out.bound - 1e-6;
  return out;
}

struct ClassicalityResult {
  bool classical = false;
  double distance = 0.0;  // || dephased(rho) - rho ||_1 at the optimum
  std::vector<ProjectiveBasis> bases;
  OptimizerResult diagnostics;
};

/// Classical-quantum (dephasing `side` only) or classical-classical
/// (dephasing both) test: true iff some basis leaves rho within `tol` in
/// trace norm. The search minimizes the squared Hilbert-Schmidt distance,
/// which vanishes on the same bases and is smooth there; the trace distance
/// is then evaluated at the optimum.
inline ClassicalityResult is_classical(const DensityMatrix& rho, Classicality variant,
                                       Side side = Side::A, const OptimizerConfig& config = {},
                                       double tol = 1e-6) {
  detail::require_bipartite(rho, "is_classical");
  std::vector<int> sides;
  if (variant == Classicality::CC) sides = {0, 1};
  else sides = {index_of(side)};

  std::vector<int> counts;
  for (int k : sides) counts.push_back(basis_parameter_count(rho.dims()[k]));
  auto dephased = [&](const std::vector<double>& x) {
    Matrix m = rho.data();
    std::size_t offset = 0;
    for (std::size_t i = 0; i < sides.size(); ++i) {
      const std::span<const double> p(x.data() + offset, counts[i]);
      m = dephase(m, rho.dims(), basis_from_parameters(rho.dims()[sides[i]], p), sides[i]);
      offset += counts[i];
    }
    return m;
  };
  auto objective = [&](const std::vector<double>& x) {
    return (dephased(x) - rho.data()).squaredNorm();
  };
  std::vector<double> seed;
  for (int k : sides) {
    const auto s = detail::marginal_basis_seed(rho, k);
    seed.insert(seed.end(), s.begin(), s.end());
  }
  int dimension = 0;
  for (int c : counts) dimension += c;
  auto best = multistart_minimize(objective, dimension, config, {seed});

  ClassicalityResult out;
  const Matrix diff = dephased(best.parameters) - rho.data();
  out.distance = trace_norm(0.5 * (diff + diff.adjoint()));
  out.classical = out.distance <= tol;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const std::span<const double> p(best.parameters.data() + offset, counts[i]);
    out.bases.push_back(ProjectiveBasis::unchecked(basis_from_parameters(rho.dims()[sides[i]], p)));
    offset += counts[i];
  }
  out.diagnostics = std::move(best);
  return out;
}

}  // namespace qcorr
