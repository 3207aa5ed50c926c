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

#include <span>

#include "vqageo/mps_state.hpp"
#include "vqageo/state_vector.hpp"
#include "vqageo/tfim.hpp"

namespace vqageo {

// Fubini-Study geodesic distance S0 = 2*arccos|<a|b>|, in [0, pi]. The
// overlap magnitude is clamped to [0, 1] before the arccos.
double geodesic_distance(const StateVector& a, const StateVector& b);
double geodesic_distance(const MpsState& a, const MpsState& b);

// Share of the total phase accumulation converted to geometric phase:
// sin^2(S0/2) with S0 measured from the initial state.
double geometric_phase_fraction(const StateVector& initial, const StateVector& current);
double geometric_phase_fraction(const MpsState& initial, const MpsState& current);

// s = sqrt(sum_k |<v_k|psi>|^2), the maximal overlap with any normalized
// superposition of the ground basis. Computed through the basis; the
// projector is never materialized.
double overlap_with_target(const StateVector& state, const GroundSpace& gs);

// 2*arccos(s): geodesic distance from a state to the closest state of the
// ground space.
double geodesic_to_target(const StateVector& state, const GroundSpace& gs);

// Discrete path length sum_l S0(psi_{l-1}, psi_l), the layer-step proxy for
// the accumulated Fubini-Study distance.
double discrete_path_length(std::span<const StateVector> states);

struct GeoSample {
  double s0_from_initial;
  double gpf;
  double overlap_s;
  double gd_to_target;
};

GeoSample geo_sample(const StateVector& initial, const StateVector& current,
                     const GroundSpace& gs);

}  // namespace vqageo
