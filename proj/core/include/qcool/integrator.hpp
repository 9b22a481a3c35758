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

struct IntegratorStats {
  /// Max-entry unitarity defect of the raw result, before any projection.
  double unitarity_defect = 0.0;
  /// True when the defect exceeded the projection threshold and the result
  /// was polar-projected back onto the unitary group.
  bool projected = false;
  long steps = 0;
};

/// Propagates dU/dt = -i H(t) U from U(0) = I to t_final with fixed-step
/// classical RK4. The final partial step is shortened to land exactly on
/// t_final. H(t) must be Hermitian at every sampled time.
///
/// If the unitarity defect of the result exceeds 1e-7 the matrix is projected
/// onto the closest unitary (polar decomposition); the pre-projection defect
/// is always available through stats.
///
/// Throws std::invalid_argument for dt <= 0, negative t_final, or a sampled
/// H that is grossly non-Hermitian.
ComplexMatrix integrate_schrodinger(
    const std::function<ComplexMatrix(double)>& h_of_t, double t_final,
    double dt = 1e-3, IntegratorStats* stats = nullptr);

}  // namespace qcool
