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

#include <vector>

#include <Eigen/Dense>

#include "vqageo/state_vector.hpp"

namespace vqageo {

// Default truncation cap: 2^floor(N/2) is lossless at desk scale, so MPS
// results are directly comparable to the dense backend.
inline int lossless_chi_max(int n_qubits) { return 1 << (n_qubits / 2); }

/// Matrix-product (tensor-train) pure state. Site k carries qubit k, the
/// k-th most significant bit of the dense basis index, matching
/// StateVector. Site tensors are stored as (left_dim * 2) x right_dim
/// matrices with row index = left_bond * 2 + physical.
///
/// A mixed-canonical form is maintained: tensors left of the canonical
/// center are left-orthonormal, tensors right of it right-orthonormal.
/// Two-qubit gates on non-adjacent qubits are swap-routed along the chain,
/// which also covers the periodic wrap bond (N-1, 0).
///
/// Value type: copy to share across threads.
class MpsState {
 public:
  MpsState(int n_qubits, int chi_max, double svd_cutoff);  // |0...0>

  static MpsState computational_basis(int n_qubits, const std::vector<int>& bits,
                                      int chi_max, double svd_cutoff);

  int n_qubits() const { return static_cast<int>(sites_.size()); }
  int chi_max() const { return chi_max_; }
  double svd_cutoff() const { return svd_cutoff_; }
  int canonical_center() const { return center_; }
  std::vector<int> bond_dims() const;  // length n_qubits - 1

  void apply_1q(const Eigen::Matrix2cd& gate, int qubit);
  void apply_2q(const Eigen::Matrix4cd& gate, int q1, int q2);

  // Entanglement entropy from the Schmidt spectrum at bond `bond`, which
  // separates sites 0..bond from bond+1..N-1. Re-canonicalizes internally;
  // the represented state is unchanged.
  double bond_entropy(int bond, LogBase base = LogBase::e);

  // Full contraction; guarded to n_qubits <= 20.
  StateVector to_statevector() const;

  double norm() const;

  // Relative squared weight dropped by the most recent SVD split, and the
  // total accumulated over the state's history.
  double last_discarded_weight() const { return last_discarded_; }
  double cumulative_discarded_weight() const { return cum_discarded_; }

  // Largest orthonormality residual of any tensor relative to the canonical
  // center (validation use).
  double max_orthonormality_residual() const;

  // Site tensor access for contractions (inner products, tests).
  const Eigen::MatrixXcd& site_matrix(int site) const { return sites_[site].m; }
  int left_dim(int site) const { return static_cast<int>(sites_[site].m.rows() / 2); }
  int right_dim(int site) const { return static_cast<int>(sites_[site].m.cols()); }

 private:
  struct SiteTensor {
    Eigen::MatrixXcd m;  // (left*2) x right, row = left*2 + physical
  };

  void move_center(int target);
  void left_orthonormalize_center();   // center -> center+1
  void right_orthonormalize_center();  // center -> center-1
  void apply_2q_adjacent(const Eigen::Matrix4cd& gate, int left_site);
  void split_two_site(const Eigen::MatrixXcd& theta, int left_site);

  std::vector<SiteTensor> sites_;
  int center_ = 0;
  int chi_max_;
  double svd_cutoff_;
  double last_discarded_ = 0.0;
  double cum_discarded_ = 0.0;
};

// <a|b> by transfer-matrix contraction.
Complex inner(const MpsState& a, const MpsState& b);

}  // namespace vqageo
