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

// State types over tensor-product Hilbert spaces and the linear algebra that
// acts on them: Kronecker products, partial traces, subsystem permutations,
// purification, Schmidt decomposition and Hermitian spectral helpers.
//
// Two layers live here. Functions on raw `Matrix`/`Vector` plus a `Dims`
// signature are the kernels used inside optimizer loops and never validate.
// `DensityMatrix` and `PureState` validate on construction and are what the
// public API takes and returns.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qcorr/types.hpp"

namespace qcorr {

// ---------------------------------------------------------------------------
// spectral helpers

/// Eigenvalues of a Hermitian matrix in ascending order.
inline RealVector eigenvalues(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

struct Eigensystem {
  RealVector values;  // ascending
  Matrix vectors;     // columns
};

inline Eigensystem eigensystem(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Clips eigenvalues in [-1e-10, 0) to zero. Anything more negative is a
/// genuinely invalid state and raises.
inline RealVector clip_spectrum(RealVector values) {
  for (auto& v : values) {
    if (v < -tolerance::kPsd) throw InvalidState("psd", -v);
    if (v < 0.0) v = 0.0;
  }
  return values;
}

/// V f(w) V^dagger for a Hermitian argument.
template <typename F>
Matrix apply_function(const Matrix& hermitian, F&& f) {
  auto [w, v] = eigensystem(hermitian);
  RealVector fw(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) fw[i] = f(w[i]);
  return v * fw.cast<Complex>().asDiagonal() * v.adjoint();
}

inline double trace_norm(const Matrix& hermitian) {
  return eigenvalues(hermitian).cwiseAbs().sum();
}

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// index arithmetic

namespace detail {

inline void check_dims(const Dims& dims) {
  if (dims.empty()) throw std::invalid_argument("dims must be nonempty");
  for (int d : dims)
    if (d < 1) throw std::invalid_argument("subsystem dimension must be >= 1");
}

inline std::vector<int> normalized_subset(std::vector<int> subset, int n) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int k : subset)
    if (k < 0 || k >= n)
      throw std::invalid_argument("subsystem index " + std::to_string(k) +
                                  " out of range");
  return subset;
}

// Row-major digits of a flat index.
inline std::vector<int> digits(int index, const Dims& dims) {
  std::vector<int> out(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
  return out;
}

// Flat index of the digits selected by `which`, in the order given.
inline int compose(const std::vector<int>& digits, const Dims& dims,
                   const std::vector<int>& which) {
  int index = 0;
  for (int k : which) index = index * dims[k] + digits[k];
  return index;
}

inline std::vector<int> complement(const std::vector<int>& subset, int n) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k)
    if (!std::binary_search(subset.begin(), subset.end(), k)) out.push_back(k);
  return out;
}

inline Dims select(const Dims& dims, const std::vector<int>& which) {
  Dims out;
  for (int k : which) out.push_back(dims[k]);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// raw kernels

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

/// Trace out every subsystem not listed in `keep`. Kept subsystems retain
/// their original relative order.
inline Matrix partial_trace(const Matrix& rho, const Dims& dims,
                            std::vector<int> keep) {
  const int n = static_cast<int>(dims.size());
  keep = detail::normalized_subset(std::move(keep), n);
  if (keep.empty()) throw std::invalid_argument("keep must be nonempty");
  const auto traced = detail::complement(keep, n);
  const int total = total_dim(dims);
  const int kept_dim = total_dim(detail::select(dims, keep));

  std::vector<int> kept_index(total), traced_index(total);
  for (int i = 0; i < total; ++i) {
    const auto d = detail::digits(i, dims);
    kept_index[i] = detail::compose(d, dims, keep);
    traced_index[i] = detail::compose(d, dims, traced);
  }
  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j)
      if (traced_index[i] == traced_index[j])
        out(kept_index[i], kept_index[j]) += rho(i, j);
  return out;
}

/// Flat-index map for reordering subsystems: new subsystem p is old
/// subsystem `order[p]`.
inline std::vector<int> permutation_map(const Dims& dims, const std::vector<int>& order) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(order.size()) != n ||
      detail::normalized_subset(order, n).size() != order.size())
    throw std::invalid_argument("order must be a permutation of the subsystems");
  const int total = total_dim(dims);
  std::vector<int> map(total);
  for (int i = 0; i < total; ++i)
    map[i] = detail::compose(detail::digits(i, dims), dims, order);
  return map;
}

inline Matrix permute(const Matrix& rho, const Dims& dims, const std::vector<int>& order) {
  const auto map = permutation_map(dims, order);
  Matrix out(rho.rows(), rho.cols());
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j) out(map[i], map[j]) = rho(i, j);
  return out;
}

inline Vector permute(const Vector& psi, const Dims& dims, const std::vector<int>& order) {
  const auto map = permutation_map(dims, order);
  Vector out(psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) out[map[i]] = psi[i];
  return out;
}

/// I (x) op (x) I with `op` acting on subsystem k. `op` may be rectangular.
inline Matrix embed(const Matrix& op, const Dims& dims, int k) {
  int left = 1, right = 1;
  for (int i = 0; i < k; ++i) left *= dims[i];
  for (int i = k + 1; i < static_cast<int>(dims.size()); ++i) right *= dims[i];
  return kron(kron(Matrix::Identity(left, left), op), Matrix::Identity(right, right));
}

// ---------------------------------------------------------------------------
// validated state types

/// Reports the first violated invariant of a candidate density matrix.
inline std::optional<InvalidState> check_density(const Dims& dims, const Matrix& m) {
  if (m.rows() != m.cols()) return InvalidState("square", std::abs(m.rows() - m.cols()));
  if (m.rows() != total_dim(dims))
    return InvalidState("dimension", std::abs(m.rows() - total_dim(dims)));
  const double herm = max_abs(m - m.adjoint());
  if (herm > tolerance::kHermitian) return InvalidState("hermitian", herm);
  const double trace_err = std::abs(m.trace() - Complex(1.0));
  if (trace_err > tolerance::kTrace) return InvalidState("trace", trace_err);
  const double lowest = eigenvalues(0.5 * (m + m.adjoint())).minCoeff();
  if (lowest < -tolerance::kPsd) return InvalidState("psd", -lowest);
  return std::nullopt;
}

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity.
  DensityMatrix(Dims dims, Matrix data) : dims_(std::move(dims)), data_(std::move(data)) {
    detail::check_dims(dims_);
    if (auto err = check_density(dims_, data_)) throw *err;
  }

  /// Skips validation. For results built from already valid states.
  static DensityMatrix unchecked(Dims dims, Matrix data) {
    return DensityMatrix(std::move(dims), std::move(data), Unchecked{});
  }

  static DensityMatrix maximally_mixed(Dims dims) {
    const int n = total_dim(dims);
    return unchecked(std::move(dims), Matrix::Identity(n, n) / double(n));
  }

  const Dims& dims() const noexcept { return dims_; }
  const Matrix& data() const noexcept { return data_; }
  int dim() const noexcept { return static_cast<int>(data_.rows()); }
  int num_subsystems() const noexcept { return static_cast<int>(dims_.size()); }

  Complex operator()(int i, int j) const { return data_(i, j); }

 private:
  struct Unchecked {};
  DensityMatrix(Dims dims, Matrix data, Unchecked)
      : dims_(std::move(dims)), data_(std::move(data)) {}

  Dims dims_;
  Matrix data_;
};

class PureState {
 public:
  PureState(Dims dims, Vector amps) : dims_(std::move(dims)), amps_(std::move(amps)) {
    detail::check_dims(dims_);
    if (amps_.size() != total_dim(dims_))
      throw InvalidState("dimension", std::abs(double(amps_.size() - total_dim(dims_))));
    const double err = std::abs(amps_.norm() - 1.0);
    if (err > tolerance::kNorm) throw InvalidState("norm", err);
  }

  /// Rescales `amps` to unit norm first.
  static PureState normalized(Dims dims, Vector amps) {
    const double n = amps.norm();
    if (n == 0.0) throw InvalidState("norm", 1.0);
    return PureState(std::move(dims), amps / n);
  }

  const Dims& dims() const noexcept { return dims_; }
  const Vector& amps() const noexcept { return amps_; }
  int dim() const noexcept { return static_cast<int>(amps_.size()); }

  DensityMatrix density() const {
    return DensityMatrix::unchecked(dims_, amps_ * amps_.adjoint());
  }

 private:
  Dims dims_;
  Vector amps_;
};

struct SchmidtDecomposition {
  RealVector coefficients;  // nonincreasing
  Matrix left_vectors;      // columns
  Matrix right_vectors;     // columns
};

// ---------------------------------------------------------------------------
// operations on validated states

namespace detail {
inline Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}
}  // namespace detail

inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::unchecked(detail::concat(a.dims(), b.dims()), kron(a.data(), b.data()));
}

inline PureState tensor(const PureState& a, const PureState& b) {
  return PureState::normalized(detail::concat(a.dims(), b.dims()), kron(a.amps(), b.amps()));
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  keep = detail::normalized_subset(std::move(keep), rho.num_subsystems());
  Dims kept = detail::select(rho.dims(), keep);
  return DensityMatrix::unchecked(std::move(kept), partial_trace(rho.data(), rho.dims(), keep));
}

inline DensityMatrix permute(const DensityMatrix& rho, const std::vector<int>& order) {
  return DensityMatrix::unchecked(detail::select(rho.dims(), order),
                                  permute(rho.data(), rho.dims(), order));
}

inline PureState permute(const PureState& psi, const std::vector<int>& order) {
  return PureState::normalized(detail::select(psi.dims(), order),
                               permute(psi.amps(), psi.dims(), order));
}

/// Purification sum_k sqrt(l_k) |k>|k_E> on dims + [rank]. Eigenvalues at or
/// below 1e-12 are dropped, so the environment has dimension rank(rho).
inline PureState purify(const DensityMatrix& rho) {
  auto [w, v] = eigensystem(rho.data());
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = w.size() - 1; k >= 0; --k)
    if (w[k] > tolerance::kRank) support.push_back(k);
  const int rank = static_cast<int>(support.size());
  const int n = rho.dim();
  Vector amps = Vector::Zero(Eigen::Index(n) * rank);
  for (int e = 0; e < rank; ++e) {
    const double s = std::sqrt(w[support[e]]);
    for (int i = 0; i < n; ++i) amps[Eigen::Index(i) * rank + e] = s * v(i, support[e]);
  }
  Dims dims = rho.dims();
  dims.push_back(rank);
  return PureState::normalized(std::move(dims), std::move(amps));
}

/// Schmidt decomposition across `cut`; left vectors live on cut.left (in
/// index order), right vectors on the complement.
inline SchmidtDecomposition schmidt(const PureState& psi, const Cut& cut) {
  const int n = static_cast<int>(psi.dims().size());
  const auto left = detail::normalized_subset(cut.left, n);
  const auto right = detail::complement(left, n);
  if (left.empty() || right.empty())
    throw std::invalid_argument("cut must split the state into two nonempty parts");
  std::vector<int> order = left;
  order.insert(order.end(), right.begin(), right.end());
  const Vector amps = permute(psi.amps(), psi.dims(), order);
  const int dl = total_dim(detail::select(psi.dims(), left));
  const int dr = total_dim(detail::select(psi.dims(), right));

  // Row-major reshape: amps[i * dr + j] -> m(i, j).
  Matrix m(dl, dr);
  for (int i = 0; i < dl; ++i)
    for (int j = 0; j < dr; ++j) m(i, j) = amps[Eigen::Index(i) * dr + j];
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.singularValues(), svd.matrixU(), svd.matrixV().conjugate()};
}

/// Purity Tr(rho^2).
inline double purity(const DensityMatrix& rho) {
  return (rho.data() * rho.data()).trace().real();
}

}  // namespace qcorr
