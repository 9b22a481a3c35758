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

#include "qcool/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcool {

namespace {

constexpr double kBlockUnitaryTol = 1e-10;
constexpr double kScalarModulusTol = 1e-12;

/// 2x2 swap-type rotation cos(th) I - i sin(th) sigma_x.
ComplexMatrix swap_block(double th) {
  const Complex mi(0, -1);
  ComplexMatrix b(2, 2);
  b << std::cos(th), mi * std::sin(th), mi * std::sin(th), std::cos(th);
  return b;
}

ComplexMatrix scalar_block(Complex value) {
  ComplexMatrix b(1, 1);
  b(0, 0) = value;
  return b;
}

}  // namespace

Propagator assemble_block_diag(const BlockSpec& spec, const Dims& dims,
                               double time) {
  require_valid(dims);
  Eigen::Index total = 0;
  for (const ComplexMatrix& b : spec.blocks) {
    if (b.rows() != b.cols() || b.rows() < 1) {
      throw std::invalid_argument("assemble_block_diag: block is not square");
    }
    if (b.rows() == 1) {
      if (std::abs(std::abs(b(0, 0)) - 1.0) > kScalarModulusTol) {
        throw std::invalid_argument(
            "assemble_block_diag: scalar block does not have unit modulus");
      }
    } else if (unitarity_defect(b) > kBlockUnitaryTol) {
      throw std::invalid_argument(
          "assemble_block_diag: block is not unitary");
    }
    total += b.rows();
  }
  if (total != dims.total()) {
    throw std::invalid_argument(
        "assemble_block_diag: block dimensions sum to " +
        std::to_string(total) + ", expected " + std::to_string(dims.total()));
  }
  ComplexMatrix u = ComplexMatrix::Zero(total, total);
  Eigen::Index offset = 0;
  for (const ComplexMatrix& b : spec.blocks) {
    u.block(offset, offset, b.rows(), b.cols()) = b;
    offset += b.rows();
  }
  return Propagator::checked(dims, std::move(u), time);
}

ComplexMatrix hamiltonian_from_propagator(
    const std::function<Propagator(double)>& u_of_t, double t, double dt,
    double* asymmetry) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("hamiltonian_from_propagator: dt must be > 0");
  }
  const Complex i(0, 1);
  const ComplexMatrix u_plus = u_of_t(t + dt).matrix;
  const ComplexMatrix u_minus = u_of_t(t - dt).matrix;
  const ComplexMatrix u0 = u_of_t(t).matrix;
  const ComplexMatrix raw =
      (i / (2.0 * dt)) * ComplexMatrix(u_plus - u_minus) * u0.adjoint();
  if (asymmetry != nullptr) *asymmetry = hermiticity_defect(raw);
  return 0.5 * (raw + ComplexMatrix(raw.adjoint()));
}

ModelAt toy_model(double t) {
  const Dims dims{2, 2};
  BlockSpec spec;
  // Ground-level block diag(e^{it}, e^{-it}); excited-level swap block.
  ComplexMatrix upper(2, 2);
  upper << std::polar(1.0, t), 0, 0, std::polar(1.0, -t);
  spec.blocks = {upper, swap_block(t)};
  Propagator u = assemble_block_diag(spec, dims, t);

  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  h(0, 0) = -1.0;
  h(1, 1) = 1.0;
  h(2, 3) = 1.0;
  h(3, 2) = 1.0;
  return ModelAt{std::move(u), std::move(h)};
}

ModelAt damped_model(double t) {
  const Dims dims{2, 2};
  const double theta = std::numbers::pi * (1.0 - std::exp(-t)) / 2.0;
  BlockSpec spec;
  ComplexMatrix upper(2, 2);
  upper << std::polar(1.0, t), 0, 0, std::polar(1.0, -t);
  spec.blocks = {upper, swap_block(theta)};
  Propagator u = assemble_block_diag(spec, dims, t);

  const double drive = std::numbers::pi * std::exp(-t) / 2.0;  // theta'(t)
  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  h(0, 0) = -1.0;
  h(1, 1) = 1.0;
  h(2, 3) = drive;
  h(3, 2) = drive;
  return ModelAt{std::move(u), std::move(h)};
}

ModelAt transition_model(double omega1, double omega2, double t) {
  const Dims dims{2, 2};
  BlockSpec spec;
  spec.blocks = {scalar_block(std::polar(1.0, -omega1 * t)), swap_block(t),
                 scalar_block(std::polar(1.0, -omega2 * t))};
  Propagator u = assemble_block_diag(spec, dims, t);

  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  h(0, 0) = omega1;
  h(3, 3) = omega2;
  h(1, 2) = 1.0;  // |0,e><1,g| and its conjugate
  h(2, 1) = 1.0;
  return ModelAt{std::move(u), std::move(h)};
}

Propagator multi_level_assembly(const Dims& dims,
                                const std::vector<SU2Control>& block_controls,
                                double t) {
  require_valid(dims);
  if (dims.m != 2) {
    throw std::invalid_argument(
        "multi_level_assembly: the ancilla must be a qubit (m == 2)");
  }
  if (static_cast<int>(block_controls.size()) != dims.n - 1) {
    throw std::invalid_argument(
        "multi_level_assembly: need exactly n - 1 block controls");
  }
  BlockSpec spec;
  spec.blocks.push_back(scalar_block(1.0));
  for (const SU2Control& ctrl : block_controls) {
    if (std::abs(ctrl.axis(t).z()) > 1e-12) {
      throw std::invalid_argument(
          "multi_level_assembly: a block axis with a z component leaves the "
          "ground-to-ground amplitude cos(theta) + i n_z sin(theta) nonzero");
    }
    spec.blocks.push_back(su2_propagator(ctrl, t));
  }
  spec.blocks.push_back(scalar_block(1.0));
  return assemble_block_diag(spec, dims, t);
}

Propagator xu_circuit(double s, double gamma) {
  const Dims dims{2, 2};
  const Complex i(0, 1);

  ComplexMatrix hadamard(2, 2);
  hadamard << 1, 1, 1, -1;
  hadamard /= std::sqrt(2.0);

  ComplexMatrix phase = ComplexMatrix::Zero(2, 2);
  phase(0, 0) = 1.0;
  phase(1, 1) = std::polar(1.0, gamma - std::numbers::pi / 2.0);

  // Target evolution exp(-i diag(0,1) s), applied when the ancilla is |e>.
  ComplexMatrix target_u = ComplexMatrix::Zero(2, 2);
  target_u(0, 0) = 1.0;
  target_u(1, 1) = std::polar(1.0, -s);

  ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(1, 1) = 1.0;

  const ComplexMatrix had_b = kron(identity(2), hadamard);
  const ComplexMatrix phase_b = kron(identity(2), phase);
  const ComplexMatrix controlled =
      kron(identity(2), ground) + kron(target_u, excited);

  // Temporal order: Hadamard, phase shifter, controlled evolution, Hadamard.
  ComplexMatrix u = had_b * controlled * phase_b * had_b;
  return Propagator::checked(dims, std::move(u), s);
}

ComplexMatrix xu_generator() {
  ComplexMatrix target_h = ComplexMatrix::Zero(2, 2);
  target_h(1, 1) = 1.0;
  ComplexMatrix mixer = 0.5 * (identity(2) - pauli_x());
  return kron(target_h, mixer);
}

}  // namespace qcool
