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

// One-shot cooling condition
// --------------------------
// A propagator cools the target to its ground state with a single
// post-selected ancilla-ground measurement iff every amplitude from an
// ancilla-ground input into an excited ancilla-ground output vanishes:
//
//     U_{l,g;k,g} = 0   for all l >= 1 and all k.

/// Default condition tolerance for analytically constructed propagators.
inline constexpr double kConditionTolAnalytic = 1e-10;
/// Looser default matching the accuracy of RK4-integrated propagators.
inline constexpr double kConditionTolIntegrated = 1e-6;

struct ConditionVerdict {
  bool satisfied = false;
  /// Largest |U_{l,g;k,g}| over l >= 1.
  double max_violation = 0.0;
  /// (l, k) of the largest entry; (-1, -1) when n < 2.
  int violating_l = -1;
  int violating_k = -1;
};

/// Scans all entries U_{l,g;k,g} with l in [1, n) and k in [0, n); satisfied
/// iff the largest modulus is at most tol.
ConditionVerdict check_cooling_condition(const Propagator& u,
                                         double tol = kConditionTolAnalytic);

/// Closed-form parameter counts for an n-level target with an m-level
/// ancilla: the number of real constraint equations imposed by the cooling
/// condition, the free real parameters left in the propagator, and the free
/// real parameters available when constructing a Hamiltonian for it.
struct ParamCount {
  int n = 0;
  int m = 0;
  long long constraints = 0;  // 2n^2 - 2n
  long long free_u = 0;       // n (n (m^2 - 2) + 2)
  long long free_h = 0;       // n (m - 1) (2 n (m + 1) - 1)
  /// free_h > (n m)^2, i.e. more Hamiltonian freedom than propagator entries.
  bool free_h_exceeds_propagator_params = false;
};

ParamCount count_free_parameters(const Dims& dims);

/// Denominators at or below this value make the measure undefined.
inline constexpr double kMeasureDenominatorFloor = 1e-15;

/// Cooling measure: excited-to-ground weight ratio
///
///     f = sum_{l>=1,k} |U_{l,g;k,g}|^2 / sum_k |U_{0,g;k,g}|^2.
///
/// f = 0 exactly when the one-shot cooling condition holds. When the
/// denominator vanishes (no ground-to-ground amplitude at all) the measure is
/// undefined and +infinity is returned.
double measure_f(const Propagator& u);

}  // namespace qcool
