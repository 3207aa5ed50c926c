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

#include "vqageo/mps_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vqageo {

namespace {

constexpr double kSchmidtClamp = 1e-14;
constexpr double kTieTol = 1e-12;  // relative; degenerate pairs are never split

// (left*2) x right  ->  left x (2*right), out(a, s*r + b) = in(a*2+s, b)
Eigen::MatrixXcd to_right_matrix(const Eigen::MatrixXcd& m) {
  const Eigen::Index l = m.rows() / 2;
  const Eigen::Index r = m.cols();
  Eigen::MatrixXcd out(l, 2 * r);
  for (Eigen::Index a = 0; a < l; ++a)
    for (Eigen::Index s = 0; s < 2; ++s)
      for (Eigen::Index b = 0; b < r; ++b) out(a, s * r + b) = m(a * 2 + s, b);
  return out;
}

// left x (2*right)  ->  (left*2) x right
Eigen::MatrixXcd from_right_matrix(const Eigen::MatrixXcd& mr) {
  const Eigen::Index l = mr.rows();
  const Eigen::Index r = mr.cols() / 2;
  Eigen::MatrixXcd out(l * 2, r);
  for (Eigen::Index a = 0; a < l; ++a)
    for (Eigen::Index s = 0; s < 2; ++s)
      for (Eigen::Index b = 0; b < r; ++b) out(a * 2 + s, b) = mr(a, s * r + b);
  return out;
}

// Thin QR: m = Q R with Q (rows x k) column-orthonormal, k = min(rows, cols).
void thin_qr(const Eigen::MatrixXcd& m, Eigen::MatrixXcd& q, Eigen::MatrixXcd& r) {
  const Eigen::Index k = std::min(m.rows(), m.cols());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  q = qr.householderQ() * Eigen::MatrixXcd::Identity(m.rows(), k);
  r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
}

// Gate conjugated by SWAP: exchanges the roles of the two gate qubits.
Eigen::Matrix4cd permute_gate_qubits(const Eigen::Matrix4cd& g) {
  // index (s1 s2) -> (s2 s1): permutation 0,2,1,3
  static const int p[4] = {0, 2, 1, 3};
  Eigen::Matrix4cd out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = g(p[i], p[j]);
  return out;
}

}  // namespace

MpsState::MpsState(int n_qubits, int chi_max, double svd_cutoff)
    : chi_max_(chi_max), svd_cutoff_(svd_cutoff) {
  if (n_qubits < 1) throw std::invalid_argument("MpsState: n_qubits must be >= 1");
  if (chi_max < 1) throw std::invalid_argument("MpsState: chi_max must be >= 1");
  if (svd_cutoff < 0.0) throw std::invalid_argument("MpsState: svd_cutoff must be >= 0");
  sites_.resize(n_qubits);
  for (auto& site : sites_) {
    site.m = Eigen::MatrixXcd::Zero(2, 1);
    site.m(0, 0) = 1.0;  // |0>
  }
  center_ = 0;
}

MpsState MpsState::computational_basis(int n_qubits, const std::vector<int>& bits,
                                       int chi_max, double svd_cutoff) {
  if (static_cast<int>(bits.size()) != n_qubits)
    throw std::invalid_argument("computational_basis: bitstring length mismatch");
  MpsState s(n_qubits, chi_max, svd_cutoff);
  for (int i = 0; i < n_qubits; ++i) {
    if (bits[i] != 0 && bits[i] != 1)
      throw std::invalid_argument("computational_basis: bits must be 0 or 1");
    s.sites_[i].m(0, 0) = bits[i] ? 0.0 : 1.0;
    s.sites_[i].m(1, 0) = bits[i] ? 1.0 : 0.0;
  }
  return s;
}

std::vector<int> MpsState::bond_dims() const {
  std::vector<int> dims;
  dims.reserve(sites_.size() - 1);
  for (size_t i = 0; i + 1 < sites_.size(); ++i)
    dims.push_back(static_cast<int>(sites_[i].m.cols()));
  return dims;
}

void MpsState::apply_1q(const Eigen::Matrix2cd& gate, int qubit) {
  if (qubit < 0 || qubit >= n_qubits())
    throw std::invalid_argument("apply_1q: qubit out of range");
  if (gate_validation_enabled() && !is_unitary(gate))
    throw std::invalid_argument("apply_1q: gate is not unitary");

  Eigen::MatrixXcd& m = sites_[qubit].m;
  const Eigen::Index l = m.rows() / 2;
  for (Eigen::Index a = 0; a < l; ++a) {
    const Eigen::RowVectorXcd r0 = m.row(a * 2);
    const Eigen::RowVectorXcd r1 = m.row(a * 2 + 1);
    m.row(a * 2) = gate(0, 0) * r0 + gate(0, 1) * r1;
    m.row(a * 2 + 1) = gate(1, 0) * r0 + gate(1, 1) * r1;
  }
}

void MpsState::apply_2q(const Eigen::Matrix4cd& gate, int q1, int q2) {
  const int n = n_qubits();
  if (q1 < 0 || q1 >= n || q2 < 0 || q2 >= n)
    throw std::invalid_argument("apply_2q: qubit out of range");
  if (q1 == q2) throw std::invalid_argument("apply_2q: qubits must differ");
  if (gate_validation_enabled() && !is_unitary(gate))
    throw std::invalid_argument("apply_2q: gate is not unitary");

  if (q1 + 1 == q2) {
    apply_2q_adjacent(gate, q1);
    return;
  }
  if (q2 + 1 == q1) {
    apply_2q_adjacent(permute_gate_qubits(gate), q2);
    return;
  }

  // Swap-route q1 next to q2, apply, then unwind.
  const Eigen::Matrix4cd swap = swap_gate();
  if (q1 < q2) {
    for (int p = q1; p < q2 - 1; ++p) apply_2q_adjacent(swap, p);
    apply_2q_adjacent(gate, q2 - 1);
    for (int p = q2 - 2; p >= q1; --p) apply_2q_adjacent(swap, p);
  } else {
    for (int p = q1; p > q2 + 1; --p) apply_2q_adjacent(swap, p - 1);
    apply_2q_adjacent(permute_gate_qubits(gate), q2);
    for (int p = q2 + 1; p < q1; ++p) apply_2q_adjacent(swap, p);
  }
}

void MpsState::left_orthonormalize_center() {
  Eigen::MatrixXcd q, r;
  thin_qr(sites_[center_].m, q, r);
  sites_[center_].m = q;
  Eigen::MatrixXcd next_right = to_right_matrix(sites_[center_ + 1].m);
  sites_[center_ + 1].m = from_right_matrix(r * next_right);
  ++center_;
}

void MpsState::right_orthonormalize_center() {
  // m (l x 2r) = L Q with Q row-orthonormal, via QR of the adjoint.
  const Eigen::MatrixXcd mr = to_right_matrix(sites_[center_].m);
  Eigen::MatrixXcd q, r;
  thin_qr(mr.adjoint(), q, r);
  sites_[center_].m = from_right_matrix(q.adjoint());
  sites_[center_ - 1].m = sites_[center_ - 1].m * r.adjoint();
  --center_;
}

void MpsState::move_center(int target) {
  while (center_ < target) left_orthonormalize_center();
  while (center_ > target) right_orthonormalize_center();
}

void MpsState::split_two_site(const Eigen::MatrixXcd& theta, int left_site) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(theta, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();  // descending
  const Eigen::Index count = sigma.size();

  const double total = sigma.squaredNorm();
  if (total <= 0.0) throw std::runtime_error("split_two_site: zero-norm split");

  // Keep the smallest prefix whose discarded squared weight fits the cutoff.
  Eigen::Index keep = count;
  double tail = 0.0;
  while (keep > 1) {
    const double s2 = sigma(keep - 1) * sigma(keep - 1);
    if (tail + s2 > svd_cutoff_ * total) break;
    tail += s2;
    --keep;
  }
  // Never split a degenerate pair at the boundary.
  while (keep < count && sigma(keep) >= sigma(keep - 1) - kTieTol * sigma(0)) ++keep;
  keep = std::min<Eigen::Index>(keep, chi_max_);
  keep = std::max<Eigen::Index>(keep, 1);

  double kept_sum = 0.0;
  for (Eigen::Index i = 0; i < keep; ++i) kept_sum += sigma(i) * sigma(i);
  last_discarded_ = (total - kept_sum) / total;
  cum_discarded_ += last_discarded_;

  // Renormalize the kept spectrum so the global norm returns to 1.
  const Eigen::VectorXd kept = sigma.head(keep) / std::sqrt(kept_sum);

  sites_[left_site].m = svd.matrixU().leftCols(keep);
  const Eigen::MatrixXcd right = kept.asDiagonal() * Eigen::MatrixXcd(svd.matrixV().leftCols(keep).adjoint());
  sites_[left_site + 1].m = from_right_matrix(right);
  center_ = left_site + 1;
}

void MpsState::apply_2q_adjacent(const Eigen::Matrix4cd& gate, int left_site) {
  move_center(std::clamp(center_, left_site, left_site + 1));

  const Eigen::MatrixXcd& a = sites_[left_site].m;        // (l*2) x m
  const Eigen::MatrixXcd b = to_right_matrix(sites_[left_site + 1].m);  // m x (2r)
  const Eigen::Index l = a.rows() / 2;
  const Eigen::Index r = b.cols() / 2;

  // contracted pair: row a*2+s1, col s2*r + bcol
  Eigen::MatrixXcd theta = a * b;
  for (Eigen::Index ai = 0; ai < l; ++ai) {
    for (Eigen::Index bi = 0; bi < r; ++bi) {
      Eigen::Vector4cd v;
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) v(s1 * 2 + s2) = theta(ai * 2 + s1, s2 * r + bi);
      const Eigen::Vector4cd w = gate * v;
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) theta(ai * 2 + s1, s2 * r + bi) = w(s1 * 2 + s2);
    }
  }
  split_two_site(theta, left_site);
}

double MpsState::bond_entropy(int bond, LogBase base) {
  if (bond < 0 || bond >= n_qubits() - 1)
    throw std::invalid_argument("bond_entropy: bond out of range");
  move_center(bond);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sites_[bond].m);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double total = sigma.squaredNorm();
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    const double p = sigma(i) * sigma(i) / total;
    if (p > kSchmidtClamp) entropy -= p * std::log(p);
  }
  if (base == LogBase::two) entropy /= std::log(2.0);
  return entropy;
}

StateVector MpsState::to_statevector() const {
  const int n = n_qubits();
  if (n > 20) throw std::invalid_argument("to_statevector: n_qubits exceeds guard (20)");

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Ones(1, 1);
  for (const auto& site : sites_) {
    const Eigen::Index l = site.m.rows() / 2;
    const Eigen::Index r = site.m.cols();
    Eigen::MatrixXcd next(acc.rows() * 2, r);
    for (int s = 0; s < 2; ++s) {
      Eigen::MatrixXcd slice(l, r);
      for (Eigen::Index a = 0; a < l; ++a) slice.row(a) = site.m.row(a * 2 + s);
      const Eigen::MatrixXcd out = acc * slice;
      for (Eigen::Index x = 0; x < acc.rows(); ++x) next.row(x * 2 + s) = out.row(x);
    }
    acc = std::move(next);
  }
  return StateVector(n, Eigen::VectorXcd(acc.col(0)));
}

double MpsState::norm() const {
  return std::sqrt(std::abs(vqageo::inner(*this, *this)));
}

double MpsState::max_orthonormality_residual() const {
  double worst = 0.0;
  for (int i = 0; i < n_qubits(); ++i) {
    if (i < center_) {
      const Eigen::MatrixXcd& m = sites_[i].m;
      const Eigen::MatrixXcd d =
          m.adjoint() * m - Eigen::MatrixXcd::Identity(m.cols(), m.cols());
      worst = std::max(worst, d.cwiseAbs().maxCoeff());
    } else if (i > center_) {
      const Eigen::MatrixXcd mr = to_right_matrix(sites_[i].m);
      const Eigen::MatrixXcd d =
          mr * mr.adjoint() - Eigen::MatrixXcd::Identity(mr.rows(), mr.rows());
      worst = std::max(worst, d.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

Complex inner(const MpsState& a, const MpsState& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("inner: qubit count mismatch");

  Eigen::MatrixXcd env = Eigen::MatrixXcd::Ones(1, 1);
  for (int i = 0; i < a.n_qubits(); ++i) {
    const Eigen::MatrixXcd& am = a.site_matrix(i);
    const Eigen::MatrixXcd& bm = b.site_matrix(i);
    const Eigen::Index al = am.rows() / 2, ar = am.cols();
    const Eigen::Index bl = bm.rows() / 2, br = bm.cols();
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(ar, br);
    for (int s = 0; s < 2; ++s) {
      Eigen::MatrixXcd as(al, ar), bs(bl, br);
      for (Eigen::Index x = 0; x < al; ++x) as.row(x) = am.row(x * 2 + s);
      for (Eigen::Index x = 0; x < bl; ++x) bs.row(x) = bm.row(x * 2 + s);
      next += as.adjoint() * env * bs;
    }
    env = std::move(next);
  }
  return env(0, 0);
}

}  // namespace vqageo
