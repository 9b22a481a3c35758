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

#include "qcool/matrix.hpp"

#include <limits>
#include <stdexcept>

namespace qcool {

void require_valid(const Tolerance& tol) {
  if (!(tol.abs_tol > 0.0) || !(tol.rel_tol > 0.0)) {
    throw std::invalid_argument("Tolerance values must be strictly positive");
  }
}

ComplexMatrix identity(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  const Complex i(0, 1);
  ComplexMatrix m(2, 2);
  m << 0, -i, i, 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix pauli_dot(const Eigen::Vector3d& v) {
  return v.x() * pauli_x() + v.y() * pauli_y() + v.z() * pauli_z();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("mat_mul: dimension mismatch");
  }
  return a * b;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

double max_abs(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return max_abs(a - b);
}

double unitarity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(ComplexMatrix(a.adjoint() * a) - identity(a.rows()));
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(a - ComplexMatrix(a.adjoint()));
}

bool is_unitary(const ComplexMatrix& a, const Tolerance& tol) {
  require_valid(tol);
  return unitarity_defect(a) < tol.abs_tol;
}

bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol) {
  require_valid(tol);
  return hermiticity_defect(a) < tol.abs_tol;
}

}  // namespace qcool
