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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vqageo/mps_state.hpp"
#include "vqageo/state_vector.hpp"

namespace vqageo {

enum class Boundary { periodic, open };

// H = -J sum_j Z_j Z_{j+1} - h sum_j X_j, critical at h = J.
struct TfimParams {
  int n_qubits = 2;
  double coupling_j = 1.0;
  double field_h = 1.0;
  Boundary boundary = Boundary::periodic;
};

struct PauliTerm {
  double coeff = 0.0;
  std::string ops;  // one of I, X, Y, Z per qubit
};
using PauliTermList = std::vector<PauliTerm>;

// Pauli term list of the TFIM Hamiltonian. Periodic chains include the wrap
// bond (N-1, 0); duplicate operator strings are merged by summing
// coefficients (the literal periodic sum at N=2 visits the same bond twice,
// giving a single ZZ term with coefficient -2J).
PauliTermList tfim_terms(const TfimParams& params);

// sum_t c_t (tensor product of Pauli factors); guarded to n_qubits <= 12.
Eigen::MatrixXcd dense_hamiltonian(const PauliTermList& terms, int n_qubits);

/// Ground energy, orthonormal ground basis and spectral gap from dense ED.
struct GroundSpace {
  int n_qubits = 0;
  double energy = 0.0;        // E0
  Eigen::MatrixXcd basis;     // dim x m, orthonormal columns
  double gap = 0.0;           // first eigenvalue above the ground multiplet - E0

  int degeneracy() const { return static_cast<int>(basis.cols()); }

  // P = sum_k |v_k><v_k|, materialized on demand; guarded to n_qubits <= 10.
  Eigen::MatrixXcd projector() const;
};

GroundSpace ground_space(const Eigen::MatrixXcd& hamiltonian, double rel_tol = 1e-10);
GroundSpace tfim_ground_space(const TfimParams& params, double rel_tol = 1e-10);

// In-place |psi> -> P|psi> for a Pauli string.
void apply_pauli_string(StateVector& state, const std::string& ops);
void apply_pauli_string(MpsState& state, const std::string& ops);

// sum_t c_t <psi|P_t|psi>; throws if an imaginary residue above 1e-10 shows up.
double energy_expectation(const StateVector& state, const PauliTermList& terms);
double energy_expectation(const MpsState& state, const PauliTermList& terms);

// Balanced-cut entropy of the lowest-index ground basis vector (the gray
// reference line of the layer plots).
double ground_state_entropy(const GroundSpace& gs, int block_size,
                            LogBase base = LogBase::e);

}  // namespace vqageo
