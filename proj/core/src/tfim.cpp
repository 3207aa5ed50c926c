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

#include "vqageo/tfim.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace vqageo {

namespace {
constexpr double kImagResidueTol = 1e-10;

std::string single_site_string(int n, int site, char op) {
  std::string s(n, 'I');
  s[site] = op;
  return s;
}
}  // namespace

PauliTermList tfim_terms(const TfimParams& params) {
  const int n = params.n_qubits;
  if (n < 2) throw std::invalid_argument("tfim_terms: n_qubits must be >= 2");

  // Accumulate coefficients per operator string, preserving first-seen order.
  std::vector<std::string> order;
  std::map<std::string, double> coeffs;
  auto add = [&](const std::string& ops, double c) {
    auto it = coeffs.find(ops);
    if (it == coeffs.end()) {
      order.push_back(ops);
      coeffs.emplace(ops, c);
    } else {
      it->second += c;
    }
  };

  const int n_bonds = params.boundary == Boundary::periodic ? n : n - 1;
  for (int j = 0; j < n_bonds; ++j) {
    std::string s(n, 'I');
    s[j] = 'Z';
    s[(j + 1) % n] = 'Z';
    add(s, -params.coupling_j);
  }
  for (int j = 0; j < n; ++j) add(single_site_string(n, j, 'X'), -params.field_h);

  PauliTermList terms;
  terms.reserve(order.size());
  for (const auto& ops : order) terms.push_back({coeffs.at(ops), ops});
  return terms;
}

Eigen::MatrixXcd dense_hamiltonian(const PauliTermList& terms, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 12)
    throw std::invalid_argument("dense_hamiltonian: n_qubits outside dense guard (1..12)");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  for (const auto& term : terms) {
    if (static_cast<int>(term.ops.size()) != n_qubits)
      throw std::invalid_argument("dense_hamiltonian: operator string length mismatch");
    // Pauli strings map each basis state to a single basis state with a phase.
    for (Eigen::Index col = 0; col < dim; ++col) {
      Eigen::Index row = col;
      Complex phase = 1.0;
      for (int q = 0; q < n_qubits; ++q) {
        const Eigen::Index mask = Eigen::Index{1} << (n_qubits - 1 - q);
        const bool bit = (col & mask) != 0;
        switch (term.ops[q]) {
          case 'I':
            break;
          case 'X':
            row ^= mask;
            break;
          case 'Y':
            row ^= mask;
            phase *= bit ? Complex(0, -1) : Complex(0, 1);
            break;
          case 'Z':
            if (bit) phase = -phase;
            break;
          default:
            throw std::invalid_argument("dense_hamiltonian: invalid Pauli character");
        }
      }
      h(row, col) += term.coeff * phase;
    }
  }
  return h;
}

GroundSpace ground_space(const Eigen::MatrixXcd& hamiltonian, double rel_tol) {
  const EigenSystem es = hermitian_eigensystem(hamiltonian);
  const Eigen::Index dim = es.values.size();
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;

  const double e0 = es.values(0);
  const double threshold = e0 + rel_tol * std::max(1.0, std::abs(e0));
  Eigen::Index m = 1;
  while (m < dim && es.values(m) <= threshold) ++m;

  GroundSpace gs;
  gs.n_qubits = n;
  gs.energy = e0;
  gs.basis = es.vectors.leftCols(m);
  gs.gap = m < dim ? es.values(m) - e0 : 0.0;
  return gs;
}

GroundSpace tfim_ground_space(const TfimParams& params, double rel_tol) {
  return ground_space(dense_hamiltonian(tfim_terms(params), params.n_qubits), rel_tol);
}

Eigen::MatrixXcd GroundSpace::projector() const {
  if (n_qubits > 10)
    throw std::invalid_argument("projector: dense projector guarded to n_qubits <= 10");
  return basis * basis.adjoint();
}

void apply_pauli_string(StateVector& state, const std::string& ops) {
  if (static_cast<int>(ops.size()) != state.n_qubits())
    throw std::invalid_argument("apply_pauli_string: length mismatch");
  for (int q = 0; q < state.n_qubits(); ++q) {
    switch (ops[q]) {
      case 'I':
        break;
      case 'X':
        state.apply_1q(pauli_x(), q);
        break;
      case 'Y':
        state.apply_1q(pauli_y(), q);
        break;
      case 'Z':
        state.apply_1q(pauli_z(), q);
        break;
      default:
        throw std::invalid_argument("apply_pauli_string: invalid Pauli character");
    }
  }
}

void apply_pauli_string(MpsState& state, const std::string& ops) {
  if (static_cast<int>(ops.size()) != state.n_qubits())
    throw std::invalid_argument("apply_pauli_string: length mismatch");
  for (int q = 0; q < state.n_qubits(); ++q) {
    switch (ops[q]) {
      case 'I':
        break;
      case 'X':
        state.apply_1q(pauli_x(), q);
        break;
      case 'Y':
        state.apply_1q(pauli_y(), q);
        break;
      case 'Z':
        state.apply_1q(pauli_z(), q);
        break;
      default:
        throw std::invalid_argument("apply_pauli_string: invalid Pauli character");
    }
  }
}

double energy_expectation(const StateVector& state, const PauliTermList& terms) {
  double energy = 0.0;
  for (const auto& term : terms) {
    StateVector transformed = state;
    apply_pauli_string(transformed, term.ops);
    const Complex val = inner(state, transformed);
    if (std::abs(val.imag()) > kImagResidueTol)
      throw std::runtime_error("energy_expectation: imaginary residue beyond tolerance");
    energy += term.coeff * val.real();
  }
  return energy;
}

double energy_expectation(const MpsState& state, const PauliTermList& terms) {
  double energy = 0.0;
  for (const auto& term : terms) {
    MpsState transformed = state;
    apply_pauli_string(transformed, term.ops);
    const Complex val = inner(state, transformed);
    if (std::abs(val.imag()) > kImagResidueTol)
      throw std::runtime_error("energy_expectation: imaginary residue beyond tolerance");
    energy += term.coeff * val.real();
  }
  return energy;
}

double ground_state_entropy(const GroundSpace& gs, int block_size, LogBase base) {
  if (gs.degeneracy() < 1) throw std::invalid_argument("ground_state_entropy: empty basis");
  StateVector v(gs.n_qubits, Eigen::VectorXcd(gs.basis.col(0)));
  return von_neumann_entropy(reduced_density(v, block_size), base);
}

}  // namespace vqageo
