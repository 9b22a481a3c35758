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

#include <stdexcept>
#include <utility>
#include <vector>

#include "qcool/matrix.hpp"

namespace qcool {

// Composite-space conventions
// ---------------------------
// The target system A has n levels |0>..|n-1> and the ancilla B has m levels,
// with alpha = 0 the ancilla ground state |g> (for a qubit ancilla, alpha = 1
// is |e>). Product states |l, alpha> are flattened system-major:
//
//     flat = l * m + alpha
//
// so columns belonging to the ancilla ground state sit at stride m.

/// Levels of the target (n) and the ancilla (m). Both at least 2.
struct Dims {
  int n = 2;
  int m = 2;

  int total() const { return n * m; }
  int flat(int l, int alpha) const { return l * m + alpha; }

  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Throws std::invalid_argument unless n >= 2 and m >= 2.
void require_valid(const Dims& dims);

/// Index of the product state |l, alpha>.
struct BasisIndex {
  int l = 0;
  int alpha = 0;

  int flat(const Dims& dims) const { return dims.flat(l, alpha); }
  static BasisIndex from_flat(int flat, const Dims& dims) {
    return {flat / dims.m, flat % dims.m};
  }
};

/// Thrown when a post-selected outcome has vanishing probability and the
/// conditional state is undefined.
class no_outcome_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Post-selection probabilities at or below this value are treated as "no
/// outcome" instead of being normalized into a state.
inline constexpr double kPostSelectionFloor = 1e-12;

/// A mixed state: Hermitian, positive semidefinite, unit trace.
///
/// The constructor validates all three properties (tolerance 1e-10) and
/// throws std::invalid_argument on violation.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix rho);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const ComplexMatrix& matrix() const { return rho_; }

  /// Real diagonal (populations).
  std::vector<double> diagonal() const;

  /// True when every off-diagonal modulus is below tol.
  bool is_diagonal(double tol = 1e-14) const;

 private:
  ComplexMatrix rho_;
};

/// Boltzmann-weighted diagonal state over equally spaced levels
/// (energy l * omega, weights exp(-l omega / temp)). Units hbar = k_B = 1.
struct ThermalSpec {
  double omega = 1.0;
  double temp = 1.0;
  int n_levels = 2;
};

/// Throws std::invalid_argument unless omega > 0, temp >= 0, n_levels >= 1.
void require_valid(const ThermalSpec& spec);

/// Smallest truncation with untruncated tail mass exp(-L omega/T)/Z below
/// tail_mass, clamped to [2, 256]. Z is the full geometric partition sum.
int suggested_levels(double omega, double temp, double tail_mass = 1e-6);

/// Diagonal thermal state, normalized over the kept levels. temp = 0 gives
/// exactly |0><0|; temp = infinity gives the maximally mixed diagonal.
DensityOperator thermal_state(const ThermalSpec& spec);

/// Joint unitary evolution operator on the composite A+B space.
struct Propagator {
  Dims dims;
  ComplexMatrix matrix;
  double time = 0.0;

  /// Validating factory: matrix must be (n m) x (n m) and unitary within
  /// unitary_tol (max-entry defect). Throws std::invalid_argument otherwise.
  static Propagator checked(const Dims& dims, ComplexMatrix matrix,
                            double time, double unitary_tol = 1e-8);

  /// Entry <l_out, a_out| U |l_in, a_in>.
  Complex entry(int l_out, int a_out, int l_in, int a_in) const {
    return matrix(dims.flat(l_out, a_out), dims.flat(l_in, a_in));
  }
};

/// rho_A tensor |g><g| on the flat-indexed composite space.
/// Throws std::invalid_argument if rho_a.dim() != dims.n.
DensityOperator embed_with_ancilla(const DensityOperator& rho_a,
                                   const Dims& dims);

/// Probability of finding the evolved composite in |l, g>.
///
/// For a diagonal rho_a this is the explicit sum over the input levels,
/// sum_k p_k |U_{l,g;k,g}|^2; for general rho_a the full quadratic form
/// <l,g| U (rho_A x |g><g|) U^dag |l,g> is evaluated.
/// Throws std::out_of_range unless 0 <= l < dims.n.
double outcome_probability(const Propagator& u, const DensityOperator& rho_a,
                           int l);

struct MeasureResult {
  double p_g = 0.0;
  DensityOperator rho_a_post;
};

/// Evolves rho_A x |g><g| under u, projects the ancilla onto |g> and
/// renormalizes. Throws no_outcome_error when the ground outcome probability
/// is at or below kPostSelectionFloor.
MeasureResult measure_ancilla_ground(const Propagator& u,
                                     const DensityOperator& rho_a);

/// Conditional ground-state probability P_{0,g} / P_g of the target after
/// post-selecting the ancilla ground outcome.
/// Throws no_outcome_error when P_g is at or below kPostSelectionFloor.
double cooling_success(const Propagator& u, const DensityOperator& rho_a);

}  // namespace qcool
