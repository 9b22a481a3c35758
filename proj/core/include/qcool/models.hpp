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

#include <vector>

#include "qcool/composite.hpp"
#include "qcool/su2.hpp"

namespace qcool {

/// Ordered diagonal blocks of a propagator on the flat-indexed composite
/// space. 1x1 blocks are unit-modulus scalars, larger blocks unitary
/// sub-propagators.
struct BlockSpec {
  std::vector<ComplexMatrix> blocks;
};

/// Places the blocks along the diagonal in flat-index order (zero elsewhere).
/// Block dimensions must sum to dims.n * dims.m; each block must be unitary
/// within 1e-10 (scalars: unit modulus within 1e-12).
Propagator assemble_block_diag(const BlockSpec& spec, const Dims& dims,
                               double time = 0.0);

/// Recovers the generator H(t) = i dU/dt U^dag of a propagator family by
/// central differences. The raw estimate is symmetrized; the max-entry
/// asymmetry before symmetrization is written to *asymmetry when given.
ComplexMatrix hamiltonian_from_propagator(
    const std::function<Propagator(double)>& u_of_t, double t,
    double dt = 1e-5, double* asymmetry = nullptr);

/// A concrete (propagator, Hamiltonian) pair at one instant.
struct ModelAt {
  Propagator u;
  ComplexMatrix h;
};

// Qubit-ancilla example models (dims 2x2, basis |0,g>,|0,e>,|1,g>,|1,e>).

/// Constant-Hamiltonian model that cools exactly at t = pi/2 + k pi:
/// a dephasing block on the ground level and a full swap block on the
/// excited level. H = |0><0| x diag(-1,1) + |1><1| x sigma_x.
ModelAt toy_model(double t);

/// Variant with an exponentially decaying drive on the excited block,
/// theta(t) = pi (1 - e^{-t}) / 2. The measure decays monotonically, opening
/// a steady sub-threshold window instead of isolated optimal instants.
ModelAt damped_model(double t);

/// Model whose Hamiltonian carries explicit transition terms
/// |1,g><0,e| + |0,e><1,g| between the two middle states, with free level
/// energies omega1 and omega2 on |0,g> and |1,e>. The propagator is
/// diag(u1, U2, u3) with unit-modulus corners.
ModelAt transition_model(double omega1, double omega2, double t);

/// Block assembly for an n-level target with a qubit ancilla (dims.m == 2):
/// U = diag(1, B_1, ..., B_{n-1}, 1) with B_i = su2_propagator(controls[i], t)
/// acting on {|i-1,e>, |i,g>}. Each control axis must have zero z-component
/// at t, otherwise the excited ground-to-ground amplitude cos(theta) +
/// i n_z sin(theta) cannot vanish and the assembly is rejected.
Propagator multi_level_assembly(const Dims& dims,
                                const std::vector<SU2Control>& block_controls,
                                double t);

/// Four-gate circuit on a qubit target with Hamiltonian diag(0, 1) and a
/// qubit ancilla: Hadamard on B, phase shifter diag(1, e^{i(gamma - pi/2)})
/// on B, controlled-exp(-i diag(0,1) s) on A (control on ancilla |e>), and a
/// closing Hadamard on B. The ancilla-ground block is
/// (I - i e^{i gamma} exp(-i diag(0,1) s)) / 2, so U_{1,g;0,g} = 0 for every
/// (s, gamma) and U_{1,g;1,g} vanishes exactly at s = pi/2 + gamma (mod 2pi).
Propagator xu_circuit(double s, double gamma);

/// Constant generator i dU/ds U^dag of the circuit family above:
/// diag(0,1) tensor (I - sigma_x)/2. Independent of gamma.
ComplexMatrix xu_generator();

}  // namespace qcool
