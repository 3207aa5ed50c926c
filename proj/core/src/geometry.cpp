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

#include "vqageo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vqageo {

namespace {
double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }
double s0_from_overlap(double overlap_magnitude) {
  return 2.0 * std::acos(clamp01(overlap_magnitude));
}
}  // namespace

double geodesic_distance(const StateVector& a, const StateVector& b) {
  return s0_from_overlap(std::abs(inner(a, b)));
}

double geodesic_distance(const MpsState& a, const MpsState& b) {
  return s0_from_overlap(std::abs(inner(a, b)));
}

double geometric_phase_fraction(const StateVector& initial, const StateVector& current) {
  const double half = geodesic_distance(initial, current) / 2.0;
  const double s = std::sin(half);
  return clamp01(s * s);
}

double geometric_phase_fraction(const MpsState& initial, const MpsState& current) {
  const double half = geodesic_distance(initial, current) / 2.0;
  const double s = std::sin(half);
  return clamp01(s * s);
}

double overlap_with_target(const StateVector& state, const GroundSpace& gs) {
  if (state.dim() != gs.basis.rows())
    throw std::invalid_argument("overlap_with_target: dimension mismatch");
  const Eigen::VectorXcd projections = gs.basis.adjoint() * state.amplitudes();
  return clamp01(projections.norm());
}

double geodesic_to_target(const StateVector& state, const GroundSpace& gs) {
  return 2.0 * std::acos(overlap_with_target(state, gs));
}

double discrete_path_length(std::span<const StateVector> states) {
  if (states.size() < 2)
    throw std::invalid_argument("discrete_path_length: need at least 2 states");
  double total = 0.0;
  for (size_t i = 1; i < states.size(); ++i)
    total += geodesic_distance(states[i - 1], states[i]);
  return total;
}

GeoSample geo_sample(const StateVector& initial, const StateVector& current,
                     const GroundSpace& gs) {
  GeoSample sample{};
  sample.s0_from_initial = geodesic_distance(initial, current);
  const double s = std::sin(sample.s0_from_initial / 2.0);
  sample.gpf = clamp01(s * s);
  sample.overlap_s = overlap_with_target(current, gs);
  sample.gd_to_target = 2.0 * std::acos(sample.overlap_s);
  return sample;
}

}  // namespace vqageo
