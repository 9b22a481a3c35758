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

#include "qcool/random.hpp"

#include <cmath>

namespace qcool {

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

ComplexMatrix random_ginibre(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  return g;
}

ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  const ComplexMatrix g = random_ginibre(dim, rng);
  return 0.5 * (g + ComplexMatrix(g.adjoint()));
}

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
  const ComplexMatrix g = random_ginibre(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the distribution is Haar.
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

DensityOperator random_density(int dim, std::mt19937_64& rng) {
  const ComplexMatrix g = random_ginibre(dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + ComplexMatrix(rho.adjoint()));
  return DensityOperator(std::move(rho));
}

DensityOperator random_diagonal_density(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  double total = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double w = -std::log(1.0 - uniform(rng));
    rho(i, i) = w;
    total += w;
  }
  rho /= total;
  return DensityOperator(std::move(rho));
}

}  // namespace qcool
