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

#pragma once

#include <complex>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Ordered subsystem dimensions. The leftmost factor is the slowest index.
using Dims = std::vector<int>;

namespace tolerance {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-10;
inline constexpr double kNorm = 1e-12;
// Eigenvalues below this are treated as outside the support.
inline constexpr double kRank = 1e-12;
// Weight of rho outside supp(sigma) that makes S(rho||sigma) infinite.
inline constexpr double kSupport = 1e-9;
inline constexpr double kPovm = 1e-10;
}  // namespace tolerance

/// A state failed one of its defining invariants. `invariant()` names it
/// ("hermitian", "trace", "psd", "norm", ...) and `magnitude()` carries the
/// size of the violation.
class InvalidState : public std::invalid_argument {
 public:
  InvalidState(std::string invariant, double magnitude)
      : std::invalid_argument(invariant + " invariant violated (magnitude " +
                              std::to_string(magnitude) + ")"),
        invariant_(std::move(invariant)),
        magnitude_(magnitude) {}

  const std::string& invariant() const noexcept { return invariant_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  std::string invariant_;
  double magnitude_;
};

/// Input is well formed but outside what an operation supports
/// (e.g. a non rank-1 POVM handed to the Naimark embedding).
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline int total_dim(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

/// Bipartition of a multipartite system: `left` lists the subsystems on the
/// first side, everything else is on the second side.
struct Cut {
  std::vector<int> left{0};
};

/// Side of a two-party state.
enum class Side { A = 0, B = 1 };

inline int index_of(Side side) { return static_cast<int>(side); }
inline Side other(Side side) { return side == Side::A ? Side::B : Side::A; }

}  // namespace qcorr
