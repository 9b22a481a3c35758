// Copyright 2026 The qcool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>

#include "qcool/matrix.hpp"

namespace qcool {

// Inverse engineering on a two-level block: pick a rotation path
//
//     U(t) = cos(theta(t)) I + i sin(theta(t)) sigma . axis(t),  |axis| = 1,
//
// and read off the Hamiltonian that drives it,
//
//     H(t) = -sigma . [theta' axis + sin(theta)cos(theta) axis'
//                      + sin^2(theta) (axis' x axis)].
//
// Derivatives are supplied by the caller; validate_su2_control cross-checks
// them against central finite differences.

struct SU2Control {
  std::function<double(double)> theta;
  std::function<double(double)> theta_dot;
  std::function<Eigen::Vector3d(double)> axis;
  std::function<Eigen::Vector3d(double)> axis_dot;
};

/// Control with a time-independent unit axis (axis_dot = 0).
SU2Control constant_axis_control(std::function<double(double)> theta,
                                 std::function<double(double)> theta_dot,
                                 const Eigen::Vector3d& axis);

/// cos(theta) I + i sin(theta) sigma.axis at time t; always unitary.
/// Throws std::invalid_argument when the axis is not a unit vector.
ComplexMatrix su2_propagator(const SU2Control& ctrl, double t);

/// The Hermitian traceless generator of the control path at time t.
ComplexMatrix su2_hamiltonian(const SU2Control& ctrl, double t);

/// Samples the control on [t_lo, t_hi] and verifies that the axis stays
/// normalized (1e-12) and that the supplied derivatives agree with central
/// finite differences (1e-6). Throws std::invalid_argument on failure.
void validate_su2_control(const SU2Control& ctrl, double t_lo, double t_hi,
                          int samples = 32);

}  // namespace qcool
