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

#include "qcool/expm.hpp"

#include <stdexcept>

namespace qcool {

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t,
                             const Tolerance& tol) {
  require_valid(tol);
  if (hermiticity_defect(h) > tol.abs_tol) {
    throw std::invalid_argument("expm_hermitian: input is not Hermitian");
  }
  // Symmetrize so the eigensolver sees an exactly Hermitian matrix.
  const ComplexMatrix hs = 0.5 * (h + ComplexMatrix(h.adjoint()));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hs);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("expm_hermitian: eigendecomposition failed");
  }
  const auto& evals = es.eigenvalues();
  const ComplexMatrix& vecs = es.eigenvectors();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    phases(i) = std::polar(1.0, -evals(i) * t);
  }
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

}  // namespace qcool
