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

#include "vqageo/ansatz.hpp"
#include "vqageo/tfim.hpp"

namespace vqageo {

enum class Backend { statevector, mps };

struct AdamConfig {
  double learning_rate = 0.5;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int iterations = 200;
};

struct AdamState {
  Eigen::VectorXd m;
  Eigen::VectorXd v;
  static AdamState zeros(int param_count) {
    return {Eigen::VectorXd::Zero(param_count), Eigen::VectorXd::Zero(param_count)};
  }
};

// One bias-corrected Adam update, t >= 1.
void adam_step(AdamState& state, const Eigen::VectorXd& grad, ParamVector& params,
               const AdamConfig& config, int t);

// Energy of the full-circuit state.
double cost(const Circuit& circuit, const ParamVector& params, const PauliTermList& terms);
double cost_mps(const Circuit& circuit, const ParamVector& params, const PauliTermList& terms,
                int chi_max, double svd_cutoff);

// Exact gradient by one forward and one reverse sweep on the statevector.
Eigen::VectorXd gradient_adjoint(const Circuit& circuit, const ParamVector& params,
                                 const PauliTermList& terms);

// Parameter-shift gradient: every gate uses exp(-i theta/2 G) with G^2 = I,
// so each gate occurrence contributes (E(+pi/2) - E(-pi/2))/2. Occurrences
// sharing a slot (the HVA sub-layers) are shifted one at a time and summed.
Eigen::VectorXd gradient_param_shift(const Circuit& circuit, const ParamVector& params,
                                     const PauliTermList& terms,
                                     Backend backend = Backend::statevector,
                                     int chi_max = 0, double svd_cutoff = 1e-12);

struct OptTrace {
  std::vector<double> energies;  // iterations + 1 entries, starting energy first
  ParamVector initial_params;
  ParamVector final_params;
  bool aborted = false;
  std::string abort_reason;
};

// Adam minimization of the energy on the statevector backend. Deterministic
// for fixed inputs. Non-finite energies or gradients abort the trace.
OptTrace optimize(const Circuit& circuit, const ParamVector& initial_params,
                  const PauliTermList& terms, const AdamConfig& config);

}  // namespace vqageo
