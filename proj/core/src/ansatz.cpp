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

#include "vqageo/ansatz.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "vqageo/gates.hpp"

namespace vqageo {

Circuit build_hva(int n_qubits, int n_layers) {
  if (n_qubits < 2) throw std::invalid_argument("build_hva: n_qubits must be >= 2");
  if (n_layers < 0) throw std::invalid_argument("build_hva: n_layers must be >= 0");

  Circuit c{AnsatzKind::HVA, n_qubits, n_layers, {}, {}, 2 * n_layers};
  for (int q = 0; q < n_qubits; ++q) c.prep.push_back({GateKind::H, q});

  for (int l = 0; l < n_layers; ++l) {
    std::vector<GateOp> layer;
    const int beta_slot = 2 * l;
    const int gamma_slot = 2 * l + 1;
    for (int j = 0; j < n_qubits; ++j)
      layer.push_back({GateKind::RZZ, j, (j + 1) % n_qubits, beta_slot});
    for (int j = 0; j < n_qubits; ++j) layer.push_back({GateKind::RX, j, -1, gamma_slot});
    c.layers.push_back(std::move(layer));
  }
  return c;
}

Circuit build_hea(int n_qubits, int n_layers) {
  if (n_qubits < 2) throw std::invalid_argument("build_hea: n_qubits must be >= 2");
  if (n_layers < 0) throw std::invalid_argument("build_hea: n_layers must be >= 0");

  Circuit c{AnsatzKind::HEA, n_qubits, n_layers, {}, {}, 3 * n_qubits * n_layers};
  for (int l = 0; l < n_layers; ++l) {
    std::vector<GateOp> layer;
    const int base = 3 * n_qubits * l;
    for (int q = 0; q < n_qubits; ++q) {
      layer.push_back({GateKind::RX, q, -1, base + 3 * q});
      layer.push_back({GateKind::RY, q, -1, base + 3 * q + 1});
      layer.push_back({GateKind::RZ, q, -1, base + 3 * q + 2});
    }
    for (int q = 0; q + 1 < n_qubits; q += 2) layer.push_back({GateKind::CNOT, q, q + 1});
    for (int q = 1; q + 1 < n_qubits; q += 2) layer.push_back({GateKind::CNOT, q, q + 1});
    c.layers.push_back(std::move(layer));
  }
  return c;
}

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::RZZ: return "RZZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
  }
  throw std::invalid_argument("gate_kind_name: unknown kind");
}

std::string ansatz_kind_name(AnsatzKind kind) {
  return kind == AnsatzKind::HVA ? "HVA" : "HEA";
}

namespace {

double angle_for(const GateOp& op, const ParamVector& params) {
  if (op.slot < 0 || op.slot >= params.size())
    throw std::invalid_argument("apply_gate: parameter slot out of range");
  return params(op.slot);
}

template <typename State>
void apply_gate_impl(State& state, const GateOp& op, double angle) {
  switch (op.kind) {
    case GateKind::H:
      state.apply_1q(hadamard(), op.q0);
      break;
    case GateKind::RX:
      state.apply_1q(rx(angle), op.q0);
      break;
    case GateKind::RY:
      state.apply_1q(ry(angle), op.q0);
      break;
    case GateKind::RZ:
      state.apply_1q(rz(angle), op.q0);
      break;
    case GateKind::RZZ:
      state.apply_2q(rzz(angle), op.q0, op.q1);
      break;
    case GateKind::CNOT:
      state.apply_2q(cnot(), op.q0, op.q1);
      break;
    case GateKind::SWAP:
      state.apply_2q(swap_gate(), op.q0, op.q1);
      break;
  }
}

bool is_parameterized(const GateOp& op) { return op.slot >= 0; }

}  // namespace

void apply_gate(StateVector& state, const GateOp& op, const ParamVector& params) {
  apply_gate_impl(state, op, is_parameterized(op) ? angle_for(op, params) : 0.0);
}

void apply_gate(MpsState& state, const GateOp& op, const ParamVector& params) {
  apply_gate_impl(state, op, is_parameterized(op) ? angle_for(op, params) : 0.0);
}

void apply_gate_with_angle(StateVector& state, const GateOp& op, double angle) {
  apply_gate_impl(state, op, angle);
}

StateVector run_prefix(const Circuit& circuit, const ParamVector& params, int upto_layer) {
  if (upto_layer < 0 || upto_layer > circuit.n_layers)
    throw std::invalid_argument("run_prefix: upto_layer out of range");
  if (params.size() != circuit.param_count)
    throw std::invalid_argument("run_prefix: parameter count mismatch");

  StateVector state(circuit.n_qubits);
  for (const auto& op : circuit.prep) apply_gate(state, op, params);
  for (int l = 0; l < upto_layer; ++l)
    for (const auto& op : circuit.layers[l]) apply_gate(state, op, params);
  return state;
}

MpsState run_prefix_mps(const Circuit& circuit, const ParamVector& params, int upto_layer,
                        int chi_max, double svd_cutoff) {
  if (upto_layer < 0 || upto_layer > circuit.n_layers)
    throw std::invalid_argument("run_prefix_mps: upto_layer out of range");
  if (params.size() != circuit.param_count)
    throw std::invalid_argument("run_prefix_mps: parameter count mismatch");

  MpsState state(circuit.n_qubits, chi_max, svd_cutoff);
  for (const auto& op : circuit.prep) apply_gate(state, op, params);
  for (int l = 0; l < upto_layer; ++l)
    for (const auto& op : circuit.layers[l]) apply_gate(state, op, params);
  return state;
}

namespace {
nlohmann::json gate_to_json(const GateOp& op) {
  nlohmann::json j;
  j["gate"] = gate_kind_name(op.kind);
  j["qubits"] = op.q1 >= 0 ? nlohmann::json{op.q0, op.q1} : nlohmann::json{op.q0};
  if (op.slot >= 0) j["slot"] = op.slot;
  return j;
}
}  // namespace

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json j;
  j["ansatz"] = ansatz_kind_name(circuit.kind);
  j["n_qubits"] = circuit.n_qubits;
  j["n_layers"] = circuit.n_layers;
  j["param_count"] = circuit.param_count;
  j["prep"] = nlohmann::json::array();
  for (const auto& op : circuit.prep) j["prep"].push_back(gate_to_json(op));
  j["layers"] = nlohmann::json::array();
  for (const auto& layer : circuit.layers) {
    nlohmann::json jl = nlohmann::json::array();
    for (const auto& op : layer) jl.push_back(gate_to_json(op));
    j["layers"].push_back(std::move(jl));
  }
  return j;
}

}  // namespace vqageo
