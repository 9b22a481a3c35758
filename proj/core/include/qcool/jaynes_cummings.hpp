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

#include "qcool/composite.hpp"

namespace qcool {

// Jaynes-Cummings resonator-qubit model on the truncated Fock space.
//
//     H = omega a^dag a + (delta/2)(|e><e| - |g><g|)
//         + g (a x |e><g| + a^dag x |g><e|)
//
// The total excitation number N = a^dag a + |e><e| is conserved, so H is
// block diagonal: the singlet |0,g>, one 2x2 block {|n,g>, |n-1,e>} per
// N = n >= 1, and the leftover top state |n_max-1,e> whose partner lies
// outside the truncation. Thermal inputs only populate |k,g> states, which
// live in complete blocks, so the kept dynamics is exact.

struct JCParams {
  double omega = 1.0;  // resonator mode frequency
  double delta = 1.0;  // qubit tunneling amplitude
  double g = 0.2;      // coupling strength
  int n_max = 12;      // Fock levels kept
};

/// Throws std::invalid_argument unless omega > 0, g >= 0, n_max >= 2.
void require_valid(const JCParams& p);

/// Spectral data of the N = n excitation block:
/// eps_{plus,minus} = omega (n - 1/2) +- sqrt((delta-omega)^2 + 4 g^2 n)/2
/// and the mixing angle with tan(2 theta_n) = 2 g sqrt(n) / (delta - omega),
/// taken on the principal branch theta_n in (-pi/4, pi/4]; exactly pi/4 at
/// resonance, 0 for g = 0.
struct JCBlockAngles {
  int n = 1;
  double eps_plus = 0.0;
  double eps_minus = 0.0;
  double theta_n = 0.0;
};

JCBlockAngles jc_block_angles(int n, const JCParams& p);

/// The truncated Hamiltonian matrix on Dims{n_max, 2}.
ComplexMatrix jc_hamiltonian(const JCParams& p);

/// Closed-form propagator exp(-i H t) assembled block by block:
/// U_{0,g;0,g} = e^{i delta t / 2},
/// U_{n,g;n,g} = e^{-i eps+ t} sin^2(theta_n) + e^{-i eps- t} cos^2(theta_n),
/// U_{n-1,e;n-1,e} with the squared sines and cosines exchanged, and
/// off-diagonal entries fixed by the unitarity of each 2x2 block.
Propagator jc_propagator_analytic(double t, const JCParams& p);

/// |U_{n,g;n,g}(t)|^2 for one block (branch-free closed form).
double jc_ground_return_probability(double t, const JCParams& p, int n);

/// Truncated cooling measure
///     f_k = sum_{n=1..k} |U_{n,g;n,g}|^2 / |U_{0,g;0,g}|^2,
/// with |U_{0,g;0,g}| = 1 identically. Requires 1 <= k < n_max.
double jc_f_k(double t, const JCParams& p, int k);

/// Lower bound on the post-selected cooling success probability for a
/// thermal input at temperature temp:
///     1 - e^{-omega/T} (f_k + Z^2 e^{-k omega/T}),  Z = 1/(1 - e^{-omega/T}).
/// Requires temp > 0.
double jc_success_bound(double t, const JCParams& p, double temp, int k);

/// Minimum of f_k over a sampled time range (grid of `samples` points plus
/// golden-section refinement of grid-local minima). For k >= 2 the
/// incommensurate block frequencies keep this minimum bounded away from
/// zero: exact one-shot cooling is unreachable and only near-optimal
/// measurement instants exist.
double jc_f_minimum(const JCParams& p, int k, double t_min, double t_max,
                    int samples);

}  // namespace qcool
