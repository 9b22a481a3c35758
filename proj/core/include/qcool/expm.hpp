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

#include "qcool/matrix.hpp"

namespace qcool {

/// exp(-i h t) for Hermitian h, computed by eigendecomposition.
///
/// Throws std::invalid_argument if h deviates from Hermiticity by more than
/// tol.abs_tol. The result is unitary to machine precision.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t,
                             const Tolerance& tol = {});

}  // namespace qcool
