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


// Measurements as channels: POVMs and projective bases, the measure-and-
// record map, local dephasing, local measurement of chosen subsystems, and
// the Naimark dilation of rank-1 POVMs.
//
// Outcome x of a measurement is recorded in the computational basis state
// |x> of a classical register whose dimension is the number of outcomes.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "qcorr/hilbert.hpp"

namespace qcorr {

class Povm {
 public:
  /// Validates that every element is Hermitian PSD and that they sum to I.
  Povm(int dim, std::vector<Matrix> elements) : dim_(dim), elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("POVM needs at least one element");
    Matrix sum = Matrix::Zero(dim_, dim_);
    for (const auto& m : elements_) {
      if (m.rows() != dim_ || m.cols() != dim_)
        throw std::invalid_argument("POVM element has wrong dimension");
      const double herm = max_abs(m - m.adjoint());
      if (herm > tolerance::kPovm) throw InvalidState("povm hermitian", herm);
      const double lowest = eigenvalues(0.5 * (m + m.adjoint())).minCoeff();
      if (lowest < -tolerance::kPovm) throw InvalidState("povm psd", -lowest);
      sum += m;
    }
    const double completeness = max_abs(sum - Matrix::Identity(dim_, dim_));
    if (completeness > tolerance::kPovm) throw InvalidState("povm completeness", completeness);
  }

  static Povm unchecked(int dim, std::vector<Matrix> elements) {
    Povm p;
    p.dim_ = dim;
    p.elements_ = std::move(elements);
    return p;
  }

  int dim() const noexcept { return dim_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  const Matrix& operator[](int x) const { return elements_[x]; }

 private:
  Povm() = default;
  int dim_ = 0;
  std::vector<Matrix> elements_;
};

/// Orthonormal basis {|e_x>} stored as the columns of a unitary.
class ProjectiveBasis {
 public:
  explicit ProjectiveBasis(Matrix vectors) : vectors_(std::move(vectors)) {
    if (vectors_.rows() != vectors_.cols())
      throw std::invalid_argument("projective basis must be square");
    const auto n = vectors_.cols();
    const double gram = max_abs(vectors_.adjoint() * vectors_ - Matrix::Identity(n, n));
    if (gram > tolerance::kPovm) throw InvalidState("orthonormality", gram);
  }

  static ProjectiveBasis unchecked(Matrix vectors) {
    ProjectiveBasis b;
    b.vectors_ = std::move(vectors);
    return b;
  }

  static ProjectiveBasis computational(int dim) {
    return unchecked(Matrix::Identity(dim, dim));
  }

  int dim() const noexcept { return static_cast<int>(vectors_.rows()); }
  const Matrix& vectors() const noexcept { return vectors_; }
  Vector vector(int x) const { return vectors_.col(x); }
  Matrix projector(int x) const { return vectors_.col(x) * vectors_.col(x).adjoint(); }

  Povm to_povm() const {
    std::vector<Matrix> elements;
    for (int x = 0; x < dim(); ++x) elements.push_back(projector(x));
    return Povm::unchecked(dim(), std::move(elements));
  }

 private:
  ProjectiveBasis() = default;
  Matrix vectors_;
};

struct MeasurementOutcome {
  std::vector<double> probabilities;
  std::vector<DensityMatrix> post_states;  // Lueders update; empty slot -> p_x = 0
};

// ---------------------------------------------------------------------------
// raw kernels

/// Unnormalized blocks Tr_k[(M_x)_k rho] on the remaining subsystems, one per
/// element. Element order is outcome order.
inline std::vector<Matrix> measurement_blocks(const Matrix& rho, const Dims& dims,
                                              const std::vector<Matrix>& elements, int k) {
  const int total = total_dim(dims);
  const int dk = dims[k];
  const int rest = total / dk;
  std::vector<int> rest_index(total), digit(total);
  {
    std::vector<int> others;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i)
      if (i != k) others.push_back(i);
    for (int i = 0; i < total; ++i) {
      const auto d = detail::digits(i, dims);
      rest_index[i] = detail::compose(d, dims, others);
      digit[i] = d[k];
    }
  }
  std::vector<Matrix> blocks;
  blocks.reserve(elements.size());
  for (const auto& m : elements) {
    Matrix block = Matrix::Zero(rest, rest);
    for (int i = 0; i < total; ++i)
      for (int j = 0; j < total; ++j) {
        const Complex c = m(digit[j], digit[i]);
        if (c != Complex(0.0)) block(rest_index[i], rest_index[j]) += c * rho(i, j);
      }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

/// Replaces subsystem k by a classical register holding the outcome:
/// sum_x Tr_k[(M_x)_k rho] (x) |x><x| at position k.
inline Matrix measure_subsystem(const Matrix& rho, const Dims& dims,
                                const std::vector<Matrix>& elements, int k) {
  const auto blocks = measurement_blocks(rho, dims, elements, k);
  Dims out_dims = dims;
  out_dims[k] = static_cast<int>(elements.size());
  Dims rest_dims = dims;
  rest_dims.erase(rest_dims.begin() + k);
  const int rest = total_dim(rest_dims);
  const int total = total_dim(out_dims);
  Matrix out = Matrix::Zero(total, total);
  std::vector<int> others;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i)
    if (i != k) others.push_back(i);
  // output index = insert x at position k of the rest digits
  std::vector<std::vector<int>> out_index(elements.size(), std::vector<int>(rest));
  for (int r = 0; r < rest; ++r) {
    const auto rd = rest_dims.empty() ? std::vector<int>{} : detail::digits(r, rest_dims);
    for (std::size_t x = 0; x < elements.size(); ++x) {
      std::vector<int> d(out_dims.size());
      for (std::size_t p = 0; p < others.size(); ++p) d[others[p]] = rd[p];
      d[k] = static_cast<int>(x);
      std::vector<int> all(out_dims.size());
      for (std::size_t p = 0; p < out_dims.size(); ++p) all[p] = static_cast<int>(p);
      out_index[x][r] = detail::compose(d, out_dims, all);
    }
  }
  for (std::size_t x = 0; x < elements.size(); ++x)
    for (int i = 0; i < rest; ++i)
      for (int j = 0; j < rest; ++j) out(out_index[x][i], out_index[x][j]) = blocks[x](i, j);
  return out;
}

/// Dephasing of subsystem k in the basis given by the columns of `basis`.
inline Matrix dephase(const Matrix& rho, const Dims& dims, const Matrix& basis, int k) {
  const Matrix w = embed(basis.adjoint(), dims, k);
  Matrix rotated = w * rho * w.adjoint();
  const int total = total_dim(dims);
  std::vector<int> digit(total);
  for (int i = 0; i < total; ++i) digit[i] = detail::digits(i, dims)[k];
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j)
      if (digit[i] != digit[j]) rotated(i, j) = 0.0;
  return w.adjoint() * rotated * w;
}

// ---------------------------------------------------------------------------
// operations on validated inputs

/// Outcome probabilities Tr(M_x rho) and Lueders post-measurement states
/// sqrt(M_x) rho sqrt(M_x) / p_x. Measures the whole system.
inline MeasurementOutcome measure(const DensityMatrix& rho, const Povm& povm) {
  if (povm.dim() != rho.dim()) throw std::invalid_argument("measure: dimension mismatch");
  MeasurementOutcome out;
  for (const auto& m : povm.elements()) {
    const Matrix root = apply_function(m, [](double l) { return l > tolerance::kPovm ? std::sqrt(l) : 0.0; });
    Matrix post = root * rho.data() * root;
    const double p = post.trace().real();
    out.probabilities.push_back(std::max(p, 0.0));
    if (p > tolerance::kRank) {
      post /= p;
      out.post_states.push_back(DensityMatrix::unchecked(rho.dims(), 0.5 * (post + post.adjoint())));
    } else {
      out.post_states.push_back(DensityMatrix::maximally_mixed(rho.dims()));
    }
  }
  return out;
}

/// Measure-and-record channel: sum_x Tr(M_x rho) |x><x|.
inline DensityMatrix measure_channel(const DensityMatrix& rho, const Povm& povm) {
  if (povm.dim() != rho.dim()) throw std::invalid_argument("measure_channel: dimension mismatch");
  const int n = povm.size();
  Matrix out = Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x) out(x, x) = std::max(0.0, (povm[x] * rho.data()).trace().real());
  return DensityMatrix::unchecked({n}, out);
}

/// sum_k (P_k (x) I) rho (P_k (x) I) with P_k the basis projectors on
/// `subsystem`.
inline DensityMatrix dephase(const DensityMatrix& rho, const ProjectiveBasis& basis, int subsystem) {
  if (subsystem < 0 || subsystem >= rho.num_subsystems())
    throw std::invalid_argument("dephase: subsystem out of range");
  if (basis.dim() != rho.dims()[subsystem])
    throw std::invalid_argument("dephase: dimension mismatch");
  return DensityMatrix::unchecked(rho.dims(),
                                  dephase(rho.data(), rho.dims(), basis.vectors(), subsystem));
}

/// Applies the given POVM to each subsystem that has one; std::nullopt
/// passes the subsystem through. Measured subsystems become outcome
/// registers.
inline DensityMatrix local_measure(const DensityMatrix& rho,
                                   const std::vector<std::optional<Povm>>& povms) {
  if (static_cast<int>(povms.size()) != rho.num_subsystems())
    throw std::invalid_argument("local_measure: need one entry per subsystem");
  Matrix data = rho.data();
  Dims dims = rho.dims();
  for (int k = 0; k < static_cast<int>(povms.size()); ++k) {
    if (!povms[k]) continue;
    if (povms[k]->dim() != dims[k]) throw std::invalid_argument("local_measure: dimension mismatch");
    data = measure_subsystem(data, dims, povms[k]->elements(), k);
    dims[k] = povms[k]->size();
  }
  return DensityMatrix::unchecked(std::move(dims), std::move(data));
}

struct NaimarkDilation {
  Matrix isometry;        // n x d, V = injection of C^d as the first d coordinates
  ProjectiveBasis basis;  // on C^n, Tr(M_x rho) = <e_x| V rho V^dag |e_x>
};

/// Realizes a rank-1 POVM {|m_x><m_x|} as a projective measurement on C^n.
/// The basis is the unitary completion W^dag of the n x d matrix whose rows
/// are <m_x|, so its first d components reproduce the POVM vectors.
inline NaimarkDilation naimark_embed(const Povm& povm) {
  const int d = povm.dim();
  const int n = povm.size();
  if (n < d) throw UnsupportedInput("naimark_embed: fewer outcomes than the dimension");
  Matrix rows(n, d);
  for (int x = 0; x < n; ++x) {
    const auto [w, v] = eigensystem(povm[x]);
    if (d > 1 && w[d - 2] > tolerance::kPovm)
      throw UnsupportedInput("naimark_embed: element " + std::to_string(x) + " is not rank-1");
    const Vector m = std::sqrt(std::max(w[d - 1], 0.0)) * v.col(d - 1);
    rows.row(x) = m.adjoint();
  }
  // rows has orthonormal columns because sum_x |m_x><m_x| = I.
  Eigen::HouseholderQR<Matrix> qr(rows);
  Matrix w = qr.householderQ() * Matrix::Identity(n, n);
  w.leftCols(d) = rows;
  // Re-orthonormalize the completion against the exact first columns.
  for (int c = d; c < n; ++c) {
    Vector col = w.col(c);
    for (int k = 0; k < c; ++k) col -= w.col(k).dot(col) * w.col(k);
    w.col(c) = col.normalized();
  }
  Matrix isometry = Matrix::Zero(n, d);
  isometry.topRows(d) = Matrix::Identity(d, d);
  return {std::move(isometry), ProjectiveBasis(w.adjoint())};
}

}  // namespace qcorr
