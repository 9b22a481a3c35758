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

#include "qcool/composite.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcool {

namespace {
constexpr double kStateTol = 1e-10;
}

void require_valid(const Dims& dims) {
  if (dims.n < 2 || dims.m < 2) {
    throw std::invalid_argument("Dims: need n >= 2 and m >= 2");
  }
}

DensityOperator::DensityOperator(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
    throw std::invalid_argument("DensityOperator: matrix must be square");
  }
  if (hermiticity_defect(rho_) > kStateTol) {
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  }
  const double trace = rho_.trace().real();
  if (std::abs(trace - 1.0) > kStateTol) {
    throw std::invalid_argument("DensityOperator: trace is not 1 (got " +
                                std::to_string(trace) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho_,
                                                  Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kStateTol) {
    throw std::invalid_argument(
        "DensityOperator: matrix has a negative eigenvalue");
  }
}

std::vector<double> DensityOperator::diagonal() const {
  std::vector<double> d(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) d[static_cast<std::size_t>(i)] = rho_(i, i).real();
  return d;
}

bool DensityOperator::is_diagonal(double tol) const {
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      if (i != j && std::abs(rho_(i, j)) > tol) return false;
    }
  }
  return true;
}

void require_valid(const ThermalSpec& spec) {
  if (!(spec.omega > 0.0)) {
    throw std::invalid_argument("ThermalSpec: omega must be positive");
  }
  if (spec.temp < 0.0) {
    throw std::invalid_argument("ThermalSpec: temp must be nonnegative");
  }
  if (spec.n_levels < 1) {
    throw std::invalid_argument("ThermalSpec: n_levels must be at least 1");
  }
}

int suggested_levels(double omega, double temp, double tail_mass) {
  if (!(omega > 0.0) || tail_mass <= 0.0) {
    throw std::invalid_argument("suggested_levels: bad arguments");
  }
  if (temp <= 0.0) return 2;
  if (!std::isfinite(temp)) return 256;  // no finite truncation bounds the tail
  const double beta = omega / temp;
  const double z = 1.0 / (1.0 - std::exp(-beta));
  // smallest integer L with exp(-L beta)/Z < tail_mass
  const int levels =
      static_cast<int>(std::floor(-std::log(tail_mass * z) / beta)) + 1;
  return std::clamp(levels, 2, 256);
}

DensityOperator thermal_state(const ThermalSpec& spec) {
  require_valid(spec);
  ComplexMatrix rho = ComplexMatrix::Zero(spec.n_levels, spec.n_levels);
  if (spec.temp == 0.0) {
    rho(0, 0) = 1.0;
    return DensityOperator(rho);
  }
  double z = 0.0;
  std::vector<double> weights(static_cast<std::size_t>(spec.n_levels));
  for (int l = 0; l < spec.n_levels; ++l) {
    const double w = std::exp(-static_cast<double>(l) * spec.omega / spec.temp);
    weights[static_cast<std::size_t>(l)] = w;
    z += w;
  }
  for (int l = 0; l < spec.n_levels; ++l) {
    rho(l, l) = weights[static_cast<std::size_t>(l)] / z;
  }
  return DensityOperator(rho);
}

Propagator Propagator::checked(const Dims& dims, ComplexMatrix matrix,
                               double time, double unitary_tol) {
  require_valid(dims);
  if (matrix.rows() != dims.total() || matrix.cols() != dims.total()) {
    throw std::invalid_argument("Propagator: matrix does not match dims");
  }
  if (unitarity_defect(matrix) > unitary_tol) {
    throw std::invalid_argument("Propagator: matrix is not unitary");
  }
  return Propagator{dims, std::move(matrix), time};
}

DensityOperator embed_with_ancilla(const DensityOperator& rho_a,
                                   const Dims& dims) {
  require_valid(dims);
  if (rho_a.dim() != dims.n) {
    throw std::invalid_argument(
        "embed_with_ancilla: state dimension does not match dims.n");
  }
  const int nm = dims.total();
  ComplexMatrix out = ComplexMatrix::Zero(nm, nm);
  for (int j = 0; j < dims.n; ++j) {
    for (int k = 0; k < dims.n; ++k) {
      out(dims.flat(j, 0), dims.flat(k, 0)) = rho_a.matrix()(j, k);
    }
  }
  return DensityOperator(std::move(out));
}

double outcome_probability(const Propagator& u, const DensityOperator& rho_a,
                           int l) {
  const Dims& dims = u.dims;
  if (rho_a.dim() != dims.n) {
    throw std::invalid_argument(
        "outcome_probability: state dimension does not match propagator");
  }
  if (l < 0 || l >= dims.n) {
    throw std::out_of_range("outcome_probability: level index out of range");
  }
  const int row = dims.flat(l, 0);
  if (rho_a.is_diagonal()) {
    double p = 0.0;
    for (int k = 0; k < dims.n; ++k) {
      p += rho_a.matrix()(k, k).real() *
           std::norm(u.matrix(row, dims.flat(k, 0)));
    }
    return p;
  }
  Complex p(0, 0);
  for (int j = 0; j < dims.n; ++j) {
    for (int k = 0; k < dims.n; ++k) {
      p += u.matrix(row, dims.flat(j, 0)) * rho_a.matrix()(j, k) *
           std::conj(u.matrix(row, dims.flat(k, 0)));
    }
  }
  return p.real();
}

MeasureResult measure_ancilla_ground(const Propagator& u,
                                     const DensityOperator& rho_a) {
  const Dims& dims = u.dims;
  const DensityOperator joint = embed_with_ancilla(rho_a, dims);
  const ComplexMatrix evolved =
      u.matrix * joint.matrix() * u.matrix.adjoint();

  ComplexMatrix block(dims.n, dims.n);
  double p_g = 0.0;
  for (int j = 0; j < dims.n; ++j) {
    for (int k = 0; k < dims.n; ++k) {
      block(j, k) = evolved(dims.flat(j, 0), dims.flat(k, 0));
    }
    p_g += block(j, j).real();
  }
  if (p_g <= kPostSelectionFloor) {
    throw no_outcome_error(
        "measure_ancilla_ground: ancilla ground outcome has vanishing "
        "probability");
  }
  block /= p_g;
  // Symmetrize away the spurious anti-Hermitian rounding part.
  ComplexMatrix sym = 0.5 * (block + ComplexMatrix(block.adjoint()));
  return MeasureResult{p_g, DensityOperator(std::move(sym))};
}

double cooling_success(const Propagator& u, const DensityOperator& rho_a) {
  double p_g = 0.0;
  for (int l = 0; l < u.dims.n; ++l) {
    p_g += outcome_probability(u, rho_a, l);
  }
  if (p_g <= kPostSelectionFloor) {
    throw no_outcome_error(
        "cooling_success: ancilla ground outcome has vanishing probability");
  }
  return outcome_probability(u, rho_a, 0) / p_g;
}

}  // namespace qcool
