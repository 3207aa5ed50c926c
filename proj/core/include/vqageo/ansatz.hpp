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
#include <nlohmann/json_fwd.hpp>

#include "vqageo/mps_state.hpp"
#include "vqageo/state_vector.hpp"

namespace vqageo {

enum class GateKind { H, RX, RY, RZ, RZZ, CNOT, SWAP };
enum class AnsatzKind { HVA, HEA };

struct GateOp {
  GateKind kind;
  int q0;
  int q1 = -1;    // second qubit for two-qubit kinds
  int slot = -1;  // parameter slot for RX/RY/RZ/RZZ
};

// Layered gate program. HVA layers share one slot across the cost sub-layer
// and one across the mixer sub-layer (2L parameters total); HEA slots are
// one per rotation gate (3*N*L total).
struct Circuit {
  AnsatzKind kind;
  int n_qubits;
  int n_layers;
  std::vector<GateOp> prep;                // fixed, parameter-free
  std::vector<std::vector<GateOp>> layers; // length n_layers
  int param_count;
};

using ParamVector = Eigen::VectorXd;

// Hadamard prep to |+>^N; each layer: RZZ(beta_l) on bonds (j, j+1 mod N)
// for ascending j including the wrap bond, then RX(gamma_l) on every qubit.
// Slots ordered (beta_1, gamma_1, beta_2, gamma_2, ...).
Circuit build_hva(int n_qubits, int n_layers);

// No prep (|0>^N); each layer: RX, RY, RZ on each qubit (slots qubit-major,
// axis X->Y->Z), then brickwall CNOTs on even pairs followed by odd pairs,
// no wraparound, control on the lower index.
Circuit build_hea(int n_qubits, int n_layers);

std::string gate_kind_name(GateKind kind);
std::string ansatz_kind_name(AnsatzKind kind);

void apply_gate(StateVector& state, const GateOp& op, const ParamVector& params);
void apply_gate(MpsState& state, const GateOp& op, const ParamVector& params);
// Same, with the rotation angle given explicitly (gradient shifts).
void apply_gate_with_angle(StateVector& state, const GateOp& op, double angle);

// State after prep and the first `upto_layer` layers (0 = prep state only).
StateVector run_prefix(const Circuit& circuit, const ParamVector& params, int upto_layer);
MpsState run_prefix_mps(const Circuit& circuit, const ParamVector& params, int upto_layer,
                        int chi_max, double svd_cutoff);

// Gate list with slot layout, for docs and golden-file tests.
nlohmann::json circuit_to_json(const Circuit& circuit);

}  // namespace vqageo
