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

#include <cstdint>
#include <random>

#include "qcool/composite.hpp"

namespace qcool {

// Seeded generators for property checks; deterministic given the engine
// state.

std::mt19937_64 make_rng(std::uint64_t seed);

/// Complex Ginibre matrix (independent standard normal real and imaginary
/// parts).
ComplexMatrix random_ginibre(int dim, std::mt19937_64& rng);

ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fixing).
ComplexMatrix random_unitary(int dim, std::mt19937_64& rng);

/// Full-rank random mixed state G G^dag / tr(G G^dag).
DensityOperator random_density(int dim, std::mt19937_64& rng);

/// Random diagonal mixed state with Dirichlet-like weights.
DensityOperator random_diagonal_density(int dim, std::mt19937_64& rng);

}  // namespace qcool
