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

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace vqageo {

using Complex = std::complex<double>;

Eigen::Matrix2cd identity_2();
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd hadamard();

// All rotations follow exp(-i * theta/2 * G) with G the named generator.
Eigen::Matrix2cd rx(double theta);
Eigen::Matrix2cd ry(double theta);
Eigen::Matrix2cd rz(double theta);
Eigen::Matrix4cd rzz(double theta);

// Two-qubit gates act on an ordered pair; the first qubit is the high bit
// of the 2-bit gate index. CNOT control is the first qubit.
Eigen::Matrix4cd cnot();
Eigen::Matrix4cd swap_gate();

bool is_unitary(const Eigen::MatrixXcd& m, double tol = 1e-12);

// Opt-in unitarity validation for gate application. Off by default; hot
// loops only pay an atomic load.
void set_gate_validation(bool enabled);
bool gate_validation_enabled();

}  // namespace vqageo
