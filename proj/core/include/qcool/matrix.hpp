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

#include <complex>

#include <Eigen/Dense>

namespace qcool {

using Complex = std::complex<double>;

/// Dense square complex matrix used for every operator in the library.
///
/// Entries are addressed as (row, column) and stored row-major. All matrices
/// are small (composite dimensions up to a few hundred), so everything is
/// dense double precision.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Absolute / relative comparison tolerances. Both must be positive.
struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
};

/// Throws std::invalid_argument unless both tolerances are strictly positive.
void require_valid(const Tolerance& tol);

ComplexMatrix identity(Eigen::Index dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// v . sigma = v_x sigma_x + v_y sigma_y + v_z sigma_z. Hermitian for real v.
ComplexMatrix pauli_dot(const Eigen::Vector3d& v);

/// Kronecker product; entry (i*B.rows()+k, j*B.cols()+l) = A(i,j) B(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix product. Throws std::invalid_argument unless both factors are
/// square with equal dimension.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Largest entry modulus.
double max_abs(const ComplexMatrix& a);

/// max |A(i,j) - B(i,j)|; infinity if shapes differ.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max-entry deviation of adjoint(A)*A from the identity; infinity for
/// non-square input.
double unitarity_defect(const ComplexMatrix& a);

/// max |A - adjoint(A)| entry; infinity for non-square input.
double hermiticity_defect(const ComplexMatrix& a);

/// True iff unitarity_defect(a) < tol.abs_tol.
bool is_unitary(const ComplexMatrix& a, const Tolerance& tol = {});

bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol = {});

}  // namespace qcool
