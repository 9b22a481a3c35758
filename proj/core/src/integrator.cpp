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

#include "qcool/integrator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcool {

namespace {

constexpr double kProjectionThreshold = 1e-7;

ComplexMatrix sample_hamiltonian(
    const std::function<ComplexMatrix(double)>& h_of_t, double t) {
  ComplexMatrix h = h_of_t(t);
  const double scale = std::max(1.0, max_abs(h));
  if (hermiticity_defect(h) > 1e-8 * scale) {
    throw std::invalid_argument(
        "integrate_schrodinger: H(t) is not Hermitian at t=" +
        std::to_string(t));
  }
  return h;
}

}  // namespace

ComplexMatrix integrate_schrodinger(
    const std::function<ComplexMatrix(double)>& h_of_t, double t_final,
    double dt, IntegratorStats* stats) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("integrate_schrodinger: dt must be positive");
  }
  if (t_final < 0.0) {
    throw std::invalid_argument(
        "integrate_schrodinger: t_final must be nonnegative");
  }

  const Complex mi(0, -1);
  ComplexMatrix h0 = sample_hamiltonian(h_of_t, 0.0);
  const Eigen::Index dim = h0.rows();
  ComplexMatrix u = identity(dim);

  double t = 0.0;
  long steps = 0;
  while (t < t_final) {
    const double h = std::min(dt, t_final - t);
    const ComplexMatrix h_mid = sample_hamiltonian(h_of_t, t + 0.5 * h);
    const ComplexMatrix h_end = sample_hamiltonian(h_of_t, t + h);

    const ComplexMatrix k1 = mi * (h0 * u);
    const ComplexMatrix k2 = mi * (h_mid * (u + (0.5 * h) * k1));
    const ComplexMatrix k3 = mi * (h_mid * (u + (0.5 * h) * k2));
    const ComplexMatrix k4 = mi * (h_end * (u + h * k3));
    u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    h0 = h_end;
    t += h;
    ++steps;
  }

  const double defect = unitarity_defect(u);
  bool projected = false;
  if (defect > kProjectionThreshold) {
    // Polar projection: closest unitary in Frobenius norm.
    Eigen::JacobiSVD<ComplexMatrix> svd(
        u, Eigen::ComputeThinU | Eigen::ComputeThinV);
    u = svd.matrixU() * svd.matrixV().adjoint();
    projected = true;
  }
  if (stats != nullptr) {
    stats->unitarity_defect = defect;
    stats->projected = projected;
    stats->steps = steps;
  }
  return u;
}

}  // namespace qcool
