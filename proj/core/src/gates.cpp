// Copyright 2026 The vqageo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqageo/gates.hpp"

#include <atomic>
#include <cmath>

namespace vqageo {

namespace {
std::atomic<bool> g_validate_gates{false};
constexpr Complex kI{0.0, 1.0};
}  // namespace

void set_gate_validation(bool enabled) { g_validate_gates.store(enabled); }
bool gate_validation_enabled() { return g_validate_gates.load(); }

Eigen::Matrix2cd identity_2() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, -kI, kI, 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

Eigen::Matrix2cd rx(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2cd m;
  m << c, -kI * s, -kI * s, c;
  return m;
}

Eigen::Matrix2cd ry(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

Eigen::Matrix2cd rz(double theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(-kI * (theta / 2.0));
  m(1, 1) = std::exp(kI * (theta / 2.0));
  return m;
}

Eigen::Matrix4cd rzz(double theta) {
  // Z(x)Z has diagonal (+1, -1, -1, +1) in the (00,01,10,11) basis.
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  const Complex minus = std::exp(-kI * (theta / 2.0));
  const Complex plus = std::exp(kI * (theta / 2.0));
  m(0, 0) = minus;
  m(1, 1) = plus;
  m(2, 2) = plus;
  m(3, 3) = minus;
  return m;
}

Eigen::Matrix4cd cnot() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

Eigen::Matrix4cd swap_gate() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Eigen::MatrixXcd delta =
      m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return delta.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace vqageo
