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

#include "vqageo/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace vqageo {

namespace {
constexpr double kEigenvalueClamp = 1e-14;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("StateVector: n_qubits must be >= 1");
  amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  amps_(0) = 1.0;
}

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 1) throw std::invalid_argument("StateVector: n_qubits must be >= 1");
  if (amps_.size() != (Eigen::Index{1} << n_qubits))
    throw std::invalid_argument("StateVector: amplitude length is not 2^n_qubits");
}

StateVector StateVector::computational_basis(int n_qubits, std::uint64_t basis_index) {
  StateVector s(n_qubits);
  if (basis_index >= (std::uint64_t{1} << n_qubits))
    throw std::invalid_argument("computational_basis: index out of range");
  s.amps_(0) = 0.0;
  s.amps_(static_cast<Eigen::Index>(basis_index)) = 1.0;
  return s;
}

void StateVector::apply_1q(const Eigen::Matrix2cd& gate, int qubit) {
  if (qubit < 0 || qubit >= n_qubits_)
    throw std::invalid_argument("apply_1q: qubit out of range");
  if (gate_validation_enabled() && !is_unitary(gate))
    throw std::invalid_argument("apply_1q: gate is not unitary");

  const Eigen::Index stride = Eigen::Index{1} << (n_qubits_ - 1 - qubit);
  const Eigen::Index dim = amps_.size();
  for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      const Eigen::Index i0 = base + off;
      const Eigen::Index i1 = i0 + stride;
      const Complex a0 = amps_(i0);
      const Complex a1 = amps_(i1);
      amps_(i0) = gate(0, 0) * a0 + gate(0, 1) * a1;
      amps_(i1) = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
  }
}

void StateVector::apply_2q(const Eigen::Matrix4cd& gate, int q1, int q2) {
  if (q1 < 0 || q1 >= n_qubits_ || q2 < 0 || q2 >= n_qubits_)
    throw std::invalid_argument("apply_2q: qubit out of range");
  if (q1 == q2) throw std::invalid_argument("apply_2q: qubits must differ");
  if (gate_validation_enabled() && !is_unitary(gate))
    throw std::invalid_argument("apply_2q: gate is not unitary");

  const Eigen::Index s1 = Eigen::Index{1} << (n_qubits_ - 1 - q1);
  const Eigen::Index s2 = Eigen::Index{1} << (n_qubits_ - 1 - q2);
  const Eigen::Index dim = amps_.size();
  for (Eigen::Index i = 0; i < dim; ++i) {
    if ((i & s1) != 0 || (i & s2) != 0) continue;
    const Eigen::Index i00 = i;
    const Eigen::Index i01 = i | s2;
    const Eigen::Index i10 = i | s1;
    const Eigen::Index i11 = i | s1 | s2;
    const Complex a00 = amps_(i00);
    const Complex a01 = amps_(i01);
    const Complex a10 = amps_(i10);
    const Complex a11 = amps_(i11);
    amps_(i00) = gate(0, 0) * a00 + gate(0, 1) * a01 + gate(0, 2) * a10 + gate(0, 3) * a11;
    amps_(i01) = gate(1, 0) * a00 + gate(1, 1) * a01 + gate(1, 2) * a10 + gate(1, 3) * a11;
    amps_(i10) = gate(2, 0) * a00 + gate(2, 1) * a01 + gate(2, 2) * a10 + gate(2, 3) * a11;
    amps_(i11) = gate(3, 0) * a00 + gate(3, 1) * a01 + gate(3, 2) * a10 + gate(3, 3) * a11;
  }
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("inner: qubit count mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

DensityMatrix reduced_density(const StateVector& state, int block_size) {
  const int n = state.n_qubits();
  if (block_size < 1 || block_size >= n)
    throw std::invalid_argument("reduced_density: block_size out of range");

  const Eigen::Index dim_a = Eigen::Index{1} << block_size;
  const Eigen::Index dim_b = Eigen::Index{1} << (n - block_size);
  // With qubit 0 as MSB the basis index factors as i = a*dim_b + b.
  Eigen::Map<const Eigen::MatrixXcd> psi(state.amplitudes().data(), dim_b, dim_a);
  DensityMatrix rho;
  rho.elements = psi.transpose() * psi.conjugate();
  return rho;
}

double von_neumann_entropy(const DensityMatrix& rho, LogBase base) {
  const Eigen::MatrixXcd& m = rho.elements;
  if (m.rows() != m.cols())
    throw std::invalid_argument("von_neumann_entropy: matrix not square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("von_neumann_entropy: matrix not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda > kEigenvalueClamp) entropy -= lambda * std::log(lambda);
  }
  if (base == LogBase::two) entropy /= std::log(2.0);
  return entropy;
}

EigenSystem hermitian_eigensystem(const Eigen::MatrixXcd& matrix,
                                  double hermiticity_tol) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("hermitian_eigensystem: matrix not square");
  if (matrix.rows() > 4096)
    throw std::invalid_argument("hermitian_eigensystem: dimension exceeds dense guard (4096)");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > hermiticity_tol)
    throw std::invalid_argument("hermitian_eigensystem: matrix not Hermitian within tolerance");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed");
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace vqageo
