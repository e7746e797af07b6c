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


// Named states used throughout the tests, the CLI and the verification
// suites.

#pragma once

#include <cmath>

#include "qcorr/hilbert.hpp"

namespace qcorr::states {

inline Vector ket(int dim, int index) {
  Vector v = Vector::Zero(dim);
  v[index] = 1.0;
  return v;
}

inline Vector plus_ket() { return (ket(2, 0) + ket(2, 1)) / std::sqrt(2.0); }
inline Vector minus_ket() { return (ket(2, 0) - ket(2, 1)) / std::sqrt(2.0); }

inline Matrix projector(const Vector& v) { return v * v.adjoint(); }

inline PureState basis_state(const Dims& dims, const std::vector<int>& digits) {
  Vector v = Vector::Ones(1);
  for (std::size_t k = 0; k < dims.size(); ++k) v = kron(v, ket(dims[k], digits[k]));
  return PureState(dims, v);
}

/// (|00> + |11>)/sqrt 2
inline PureState phi_plus() {
  Vector v = Vector::Zero(4);
  v[0] = v[3] = 1.0 / std::sqrt(2.0);
  return PureState({2, 2}, v);
}

/// (|00> - |11>)/sqrt 2
inline PureState phi_minus() {
  Vector v = Vector::Zero(4);
  v[0] = 1.0 / std::sqrt(2.0);
  v[3] = -1.0 / std::sqrt(2.0);
  return PureState({2, 2}, v);
}

/// (1 - p) I/4 + p |phi+><phi+|
inline DensityMatrix werner(double p) {
  const Matrix m = (1.0 - p) * Matrix::Identity(4, 4) / 4.0 + p * phi_plus().density().data();
  return DensityMatrix({2, 2}, m);
}

/// (|000> + |111>)/sqrt 2
inline PureState ghz() {
  Vector v = Vector::Zero(8);
  v[0] = v[7] = 1.0 / std::sqrt(2.0);
  return PureState({2, 2, 2}, v);
}

/// (|001> + |010> + |100>)/sqrt 3
inline PureState w_state() {
  Vector v = Vector::Zero(8);
  v[1] = v[2] = v[4] = 1.0 / std::sqrt(3.0);
  return PureState({2, 2, 2}, v);
}

/// Register-event state (1/2)|0><0| (x) |phi><phi| + (1/2)|1><1| (x) |psi><psi|
/// with the register first.
inline DensityMatrix register_event(const Vector& phi, const Vector& psi) {
  const Matrix m = 0.5 * kron(projector(ket(2, 0)), projector(phi)) +
                   0.5 * kron(projector(ket(2, 1)), projector(psi));
  return DensityMatrix({2, int(phi.size())}, m);
}

/// Classical coin: events |0>, |1>.
inline DensityMatrix classical_coin() { return register_event(ket(2, 0), ket(2, 1)); }

/// Quantum coin: events |+>, |1>.
inline DensityMatrix quantum_coin() { return register_event(plus_ket(), ket(2, 1)); }

}  // namespace qcorr::states
