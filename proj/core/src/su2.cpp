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

#include "qcool/su2.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcool {

namespace {

constexpr double kAxisTol = 1e-12;
constexpr double kDerivativeTol = 1e-6;

Eigen::Vector3d unit_axis_at(const SU2Control& ctrl, double t) {
  Eigen::Vector3d n = ctrl.axis(t);
  if (std::abs(n.norm() - 1.0) > kAxisTol) {
    throw std::invalid_argument("SU2Control: axis is not a unit vector at t=" +
                                std::to_string(t));
  }
  return n;
}

}  // namespace

SU2Control constant_axis_control(std::function<double(double)> theta,
                                 std::function<double(double)> theta_dot,
                                 const Eigen::Vector3d& axis) {
  return SU2Control{
      std::move(theta), std::move(theta_dot),
      [axis](double) { return axis; },
      [](double) { return Eigen::Vector3d::Zero().eval(); },
  };
}

ComplexMatrix su2_propagator(const SU2Control& ctrl, double t) {
  const double th = ctrl.theta(t);
  const Eigen::Vector3d n = unit_axis_at(ctrl, t);
  const Complex i(0, 1);
  return std::cos(th) * identity(2) + i * std::sin(th) * pauli_dot(n);
}

ComplexMatrix su2_hamiltonian(const SU2Control& ctrl, double t) {
  const double th = ctrl.theta(t);
  const double th_dot = ctrl.theta_dot(t);
  const Eigen::Vector3d n = unit_axis_at(ctrl, t);
  const Eigen::Vector3d n_dot = ctrl.axis_dot(t);
  const Eigen::Vector3d v = th_dot * n +
                            std::sin(th) * std::cos(th) * n_dot +
                            std::sin(th) * std::sin(th) * n_dot.cross(n);
  return -pauli_dot(v);
}

void validate_su2_control(const SU2Control& ctrl, double t_lo, double t_hi,
                          int samples) {
  if (!(t_lo < t_hi) || samples < 2) {
    throw std::invalid_argument("validate_su2_control: bad sampling range");
  }
  const double h = 1e-6 * std::max(1.0, std::abs(t_hi - t_lo));
  for (int i = 0; i < samples; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / (samples - 1);
    unit_axis_at(ctrl, t);
    const double fd_theta = (ctrl.theta(t + h) - ctrl.theta(t - h)) / (2 * h);
    if (std::abs(fd_theta - ctrl.theta_dot(t)) > kDerivativeTol) {
      throw std::invalid_argument(
          "SU2Control: theta_dot disagrees with finite differences at t=" +
          std::to_string(t));
    }
    const Eigen::Vector3d fd_axis =
        (ctrl.axis(t + h) - ctrl.axis(t - h)) / (2 * h);
    if ((fd_axis - ctrl.axis_dot(t)).cwiseAbs().maxCoeff() > kDerivativeTol) {
      throw std::invalid_argument(
          "SU2Control: axis_dot disagrees with finite differences at t=" +
          std::to_string(t));
    }
  }
}

}  // namespace qcool
