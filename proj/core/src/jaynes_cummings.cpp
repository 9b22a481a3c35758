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

#include "qcool/jaynes_cummings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qcool/scan.hpp"

namespace qcool {

namespace {

struct BlockForm {
  double mean = 0.0;      // omega (n - 1/2)
  double splitting = 0.0; // sqrt((delta-omega)^2 + 4 g^2 n) / 2
  double cos2 = 1.0;      // (delta - omega) / (2 splitting)
  double sin2 = 0.0;      // g sqrt(n) / splitting
};

BlockForm block_form(int n, const JCParams& p) {
  BlockForm b;
  b.mean = p.omega * (n - 0.5);
  const double detune = 0.5 * (p.delta - p.omega);
  const double coupling = p.g * std::sqrt(static_cast<double>(n));
  b.splitting = std::hypot(detune, coupling);
  if (b.splitting > 0.0) {
    b.cos2 = detune / b.splitting;
    b.sin2 = coupling / b.splitting;
  }
  return b;
}

}  // namespace

void require_valid(const JCParams& p) {
  if (!(p.omega > 0.0)) {
    throw std::invalid_argument("JCParams: omega must be positive");
  }
  if (p.g < 0.0) {
    throw std::invalid_argument("JCParams: g must be nonnegative");
  }
  if (p.n_max < 2) {
    throw std::invalid_argument("JCParams: n_max must be at least 2");
  }
}

JCBlockAngles jc_block_angles(int n, const JCParams& p) {
  require_valid(p);
  if (n < 1) {
    throw std::invalid_argument("jc_block_angles: n must be at least 1");
  }
  const BlockForm b = block_form(n, p);
  JCBlockAngles a;
  a.n = n;
  a.eps_plus = b.mean + b.splitting;
  a.eps_minus = b.mean - b.splitting;
  const double coupling = 2.0 * p.g * std::sqrt(static_cast<double>(n));
  if (coupling == 0.0) {
    a.theta_n = 0.0;
  } else if (p.delta == p.omega) {
    a.theta_n = std::numbers::pi / 4.0;
  } else {
    a.theta_n = 0.5 * std::atan(coupling / (p.delta - p.omega));
  }
  return a;
}

ComplexMatrix jc_hamiltonian(const JCParams& p) {
  require_valid(p);
  const Dims dims{p.n_max, 2};
  ComplexMatrix h = ComplexMatrix::Zero(dims.total(), dims.total());
  for (int n = 0; n < p.n_max; ++n) {
    h(dims.flat(n, 0), dims.flat(n, 0)) = p.omega * n - 0.5 * p.delta;
    h(dims.flat(n, 1), dims.flat(n, 1)) = p.omega * n + 0.5 * p.delta;
  }
  for (int n = 1; n < p.n_max; ++n) {
    const double coupling = p.g * std::sqrt(static_cast<double>(n));
    h(dims.flat(n - 1, 1), dims.flat(n, 0)) = coupling;
    h(dims.flat(n, 0), dims.flat(n - 1, 1)) = coupling;
  }
  return h;
}

Propagator jc_propagator_analytic(double t, const JCParams& p) {
  require_valid(p);
  const Dims dims{p.n_max, 2};
  const Complex i(0, 1);
  ComplexMatrix u = ComplexMatrix::Zero(dims.total(), dims.total());

  u(dims.flat(0, 0), dims.flat(0, 0)) = std::polar(1.0, 0.5 * p.delta * t);
  for (int n = 1; n < p.n_max; ++n) {
    const BlockForm b = block_form(n, p);
    const Complex mean_phase = std::polar(1.0, -b.mean * t);
    const double c = std::cos(b.splitting * t);
    const double s = std::sin(b.splitting * t);
    const int ng = dims.flat(n, 0);
    const int pe = dims.flat(n - 1, 1);
    u(ng, ng) = mean_phase * Complex(c, s * b.cos2);
    u(pe, pe) = mean_phase * Complex(c, -s * b.cos2);
    u(pe, ng) = mean_phase * (-i) * (s * b.sin2);
    u(ng, pe) = u(pe, ng);
  }
  // Top state whose block partner is outside the truncation: bare phase.
  const int top = dims.flat(p.n_max - 1, 1);
  u(top, top) = std::polar(1.0, -(p.omega * (p.n_max - 1) + 0.5 * p.delta) * t);

  return Propagator::checked(dims, std::move(u), t);
}

double jc_ground_return_probability(double t, const JCParams& p, int n) {
  require_valid(p);
  if (n < 1) {
    throw std::invalid_argument(
        "jc_ground_return_probability: n must be at least 1");
  }
  const BlockForm b = block_form(n, p);
  const double c = std::cos(b.splitting * t);
  const double s = std::sin(b.splitting * t);
  return c * c + s * s * b.cos2 * b.cos2;
}

double jc_f_k(double t, const JCParams& p, int k) {
  require_valid(p);
  if (k < 1 || k >= p.n_max) {
    throw std::invalid_argument("jc_f_k: need 1 <= k < n_max");
  }
  // |U_{0,g;0,g}|^2 = 1 identically (pure phase), so no denominator term.
  double sum = 0.0;
  for (int n = 1; n <= k; ++n) {
    sum += jc_ground_return_probability(t, p, n);
  }
  return sum;
}

double jc_success_bound(double t, const JCParams& p, double temp, int k) {
  if (!(temp > 0.0)) {
    throw std::invalid_argument("jc_success_bound: temp must be positive");
  }
  const double boltzmann = std::exp(-p.omega / temp);
  const double z = 1.0 / (1.0 - boltzmann);
  return 1.0 - boltzmann *
                   (jc_f_k(t, p, k) + z * z * std::exp(-k * p.omega / temp));
}

double jc_f_minimum(const JCParams& p, int k, double t_min, double t_max,
                    int samples) {
  const TimeScan scan = scan_function(
      [&](double t) { return jc_f_k(t, p, k); }, t_min, t_max, samples,
      /*window_threshold=*/0.0);
  double best = std::numeric_limits<double>::infinity();
  for (double f : scan.f_values) best = std::min(best, f);
  for (const TimeScan::Minimum& m : scan.minima) best = std::min(best, m.f);
  return best;
}

}  // namespace qcool
