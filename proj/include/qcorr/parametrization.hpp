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


// Angle parametrizations of unitaries, projective bases and rank-1 POVMs.
// Every parameter vector maps to a valid object, so optimizers can search
// R^k without constraints.

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "qcorr/channels.hpp"

namespace qcorr {

/// exp(iH) with H Hermitian built from n^2 reals: the diagonal first, then
/// (re, im) pairs of the strict upper triangle in row-major order.
inline Matrix unitary_from_parameters(int n, std::span<const double> params) {
  if (static_cast<int>(params.size()) != n * n)
    throw std::invalid_argument("unitary_from_parameters: need n^2 parameters");
  Matrix h = Matrix::Zero(n, n);
  std::size_t p = 0;
  for (int i = 0; i < n; ++i) h(i, i) = params[p++];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Complex z(params[p], params[p + 1]);
      p += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  const auto [w, v] = eigensystem(h);
  Vector phases(n);
  for (int i = 0; i < n; ++i) phases[i] = std::polar(1.0, w[i]);
  return v * phases.asDiagonal() * v.adjoint();
}

/// Qubit basis |e0> = cos(t/2)|0> + e^{i p} sin(t/2)|1>, |e1> orthogonal.
inline Matrix qubit_basis(double theta, double phi) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const Complex e = std::polar(1.0, phi);
  Matrix b(2, 2);
  b << c, -std::conj(e) * s, e * s, c;
  return b;
}

/// Number of angles used for a projective basis of dimension d.
inline int basis_parameter_count(int d) { return d == 2 ? 2 : d * d; }

/// Basis vectors as columns. Qubits use the Bloch angles (theta, phi);
/// larger dimensions use the columns of exp(iH).
inline Matrix basis_from_parameters(int d, std::span<const double> params) {
  if (d == 2) return qubit_basis(params[0], params[1]);
  return unitary_from_parameters(d, params);
}

/// Angles reproducing a given orthonormal basis, up to phases of the vectors
/// (which no dephasing or measurement depends on).
inline std::vector<double> basis_to_parameters(const Matrix& basis) {
  const int d = static_cast<int>(basis.rows());
  if (d == 2) {
    const Vector e0 = basis.col(0);
    const double theta = 2.0 * std::atan2(std::abs(e0[1]), std::abs(e0[0]));
    const double phi = std::arg(e0[1]) - std::arg(e0[0]);
    return {theta, phi};
  }
  // log of the unitary via its eigendecomposition (unitary is normal).
  Eigen::ComplexEigenSolver<Matrix> solver(basis);
  const Matrix v = solver.eigenvectors();
  // Orthonormalize eigenvectors in case of near-degeneracy.
  Eigen::HouseholderQR<Matrix> qr(v);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  Matrix diag = q.adjoint() * basis * q;
  Matrix h = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) h(i, i) = std::arg(diag(i, i));
  h = q * h * q.adjoint();
  std::vector<double> params;
  for (int i = 0; i < d; ++i) params.push_back(h(i, i).real());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      params.push_back(h(i, j).real());
      params.push_back(h(i, j).imag());
    }
  return params;
}

/// Rank-1 measurements with n outcomes on a d-dimensional system,
/// d <= n <= d^2. With n == d the elements are the projectors of an
/// orthonormal basis. Otherwise an n x n unitary U is generated and its first
/// d columns form an isometry V, giving M_x = V^dag |x><x| V.
class MeasurementParametrization {
 public:
  MeasurementParametrization(int dim, int outcomes = 0)
      : dim_(dim), outcomes_(outcomes == 0 ? dim : outcomes) {
    if (dim_ < 1) throw std::invalid_argument("measurement dimension must be positive");
    if (outcomes_ < dim_ || outcomes_ > dim_ * dim_)
      throw std::invalid_argument("outcome count must lie in [d, d^2]");
  }

  int dim() const noexcept { return dim_; }
  int outcomes() const noexcept { return outcomes_; }
  bool projective() const noexcept { return outcomes_ == dim_; }

  int num_parameters() const {
    return projective() ? basis_parameter_count(dim_) : outcomes_ * outcomes_;
  }

  /// Row x holds <m_x|, so M_x = |m_x><m_x|.
  Matrix rows(std::span<const double> params) const {
    if (projective()) return basis_from_parameters(dim_, params).adjoint();
    return unitary_from_parameters(outcomes_, params).leftCols(dim_);
  }

  std::vector<Matrix> elements(std::span<const double> params) const {
    const Matrix r = rows(params);
    std::vector<Matrix> out;
    out.reserve(outcomes_);
    for (int x = 0; x < outcomes_; ++x) {
      const Vector m = r.row(x).adjoint();
      out.push_back(m * m.adjoint());
    }
    return out;
  }

  Povm povm(std::span<const double> params) const {
    return Povm::unchecked(dim_, elements(params));
  }

 private:
  int dim_;
  int outcomes_;
};

}  // namespace qcorr
