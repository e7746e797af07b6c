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


// JSON state and POVM files.
//
//   {"dims":[2,2],"matrix":[[[re,im],...],...]}   density matrix, row-major
//   {"dims":[2,2],"vector":[[re,im],...]}         pure state
//   {"dim":2,"elements":[matrix,...]}             POVM
//
// Complex entries are [re, im] pairs; a bare number is read as a real entry.

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "qcorr/channels.hpp"

namespace qcorr {

/// Malformed file content (wrong shape, missing keys, non-numeric entries).
class StateFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using AnyState = std::variant<DensityMatrix, PureState>;

inline DensityMatrix as_density(const AnyState& s) {
  return std::visit(
      [](const auto& v) -> DensityMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PureState>) return v.density();
        else return v;
      },
      s);
}

namespace detail {

inline nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw StateFormatError("complex entry must be [re, im] or a number, got " + j.dump());
}

inline nlohmann::json matrix_to_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw StateFormatError("matrix must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != n)
      throw StateFormatError("matrix must be square; row " + std::to_string(i) + " has wrong length");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

inline Dims dims_from_json(const nlohmann::json& j) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty())
    throw StateFormatError("missing \"dims\" array");
  Dims dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw StateFormatError("dims entries must be positive integers");
    dims.push_back(d.get<int>());
  }
  return dims;
}

}  // namespace detail

inline nlohmann::json to_json(const DensityMatrix& rho) {
  return {{"dims", rho.dims()}, {"matrix", detail::matrix_to_json(rho.data())}};
}

inline nlohmann::json to_json(const PureState& psi) {
  auto v = nlohmann::json::array();
  for (const auto& z : psi.amps()) v.push_back(detail::complex_to_json(z));
  return {{"dims", psi.dims()}, {"vector", std::move(v)}};
}

inline nlohmann::json to_json(const Povm& povm) {
  auto elements = nlohmann::json::array();
  for (const auto& m : povm.elements()) elements.push_back(detail::matrix_to_json(m));
  return {{"dim", povm.dim()}, {"elements", std::move(elements)}};
}

/// Parses and validates a state. Format problems raise StateFormatError,
/// invariant violations raise InvalidState naming the invariant.
inline AnyState state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw StateFormatError("state must be a JSON object");
  Dims dims = detail::dims_from_json(j);
  if (j.contains("matrix")) {
    Matrix m = detail::matrix_from_json(j["matrix"]);
    if (m.rows() != total_dim(dims))
      throw StateFormatError("matrix side " + std::to_string(m.rows()) + " does not match dims product " +
                             std::to_string(total_dim(dims)));
    return DensityMatrix(std::move(dims), std::move(m));
  }
  if (j.contains("vector")) {
    const auto& v = j["vector"];
    if (!v.is_array()) throw StateFormatError("\"vector\" must be an array");
    Vector amps(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) amps[static_cast<Eigen::Index>(i)] = detail::complex_from_json(v[i]);
    if (amps.size() != total_dim(dims))
      throw StateFormatError("vector length does not match dims product");
    return PureState(std::move(dims), std::move(amps));
  }
  throw StateFormatError("state needs a \"matrix\" or a \"vector\" entry");
}

inline Povm povm_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("elements") || !j["elements"].is_array())
    throw StateFormatError("POVM needs \"dim\" and \"elements\"");
  const int dim = j["dim"].get<int>();
  std::vector<Matrix> elements;
  for (const auto& e : j["elements"]) elements.push_back(detail::matrix_from_json(e));
  return Povm(dim, std::move(elements));
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateFormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AnyState parse_state(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StateFormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return state_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw StateFormatError(std::string("malformed state: ") + e.what());
  }
}

inline AnyState read_state_file(const std::filesystem::path& path) {
  return parse_state(read_text_file(path));
}

}  // namespace qcorr
