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
#include <cstdint>

#include <Eigen/Dense>

#include "vqageo/gates.hpp"

namespace vqageo {

enum class LogBase { e, two };

// Size of the leading block for a balanced bipartition: floor(N/2) qubits
// against the rest.
inline int balanced_block_size(int n_qubits) { return n_qubits / 2; }

/// Dense N-qubit pure state. Qubit 0 is the most significant bit of the
/// basis index, so |q0 q1 ... q_{N-1}> lives at index q0*2^{N-1} + ... .
/// Value type: copy to share across threads.
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>
  StateVector(int n_qubits, Eigen::VectorXcd amplitudes);

  static StateVector computational_basis(int n_qubits, std::uint64_t basis_index);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }

  void apply_1q(const Eigen::Matrix2cd& gate, int qubit);
  void apply_2q(const Eigen::Matrix4cd& gate, int q1, int q2);

  double norm() const { return amps_.norm(); }
  void normalize() { amps_ /= amps_.norm(); }

 private:
  int n_qubits_;
  Eigen::VectorXcd amps_;
};

// <a|b>
Complex inner(const StateVector& a, const StateVector& b);

struct DensityMatrix {
  Eigen::MatrixXcd elements;
  Eigen::Index dim() const { return elements.rows(); }
};

// Partial trace over the complement of the leading `block_size` qubits.
DensityMatrix reduced_density(const StateVector& state, int block_size);

// -sum_i lambda_i log lambda_i; eigenvalues below 1e-14 contribute zero.
double von_neumann_entropy(const DensityMatrix& rho, LogBase base = LogBase::e);

struct EigenSystem {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // orthonormal columns, vectors.col(k) <-> values(k)
};

// Dense Hermitian eigendecomposition, guarded to dim <= 4096.
EigenSystem hermitian_eigensystem(const Eigen::MatrixXcd& matrix,
                                  double hermiticity_tol = 1e-10);

}  // namespace vqageo
