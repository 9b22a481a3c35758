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

#include "qcool/condition.hpp"

#include <cmath>
#include <limits>

namespace qcool {

ConditionVerdict check_cooling_condition(const Propagator& u, double tol) {
  const Dims& dims = u.dims;
  ConditionVerdict v;
  for (int l = 1; l < dims.n; ++l) {
    for (int k = 0; k < dims.n; ++k) {
      const double a = std::abs(u.entry(l, 0, k, 0));
      if (a > v.max_violation) {
        v.max_violation = a;
        v.violating_l = l;
        v.violating_k = k;
      }
    }
  }
  v.satisfied = v.max_violation <= tol;
  return v;
}

ParamCount count_free_parameters(const Dims& dims) {
  require_valid(dims);
  const long long n = dims.n;
  const long long m = dims.m;
  ParamCount c;
  c.n = dims.n;
  c.m = dims.m;
  c.constraints = 2 * n * n - 2 * n;
  c.free_u = n * (n * (m * m - 2) + 2);
  c.free_h = n * (m - 1) * (2 * n * (m + 1) - 1);
  c.free_h_exceeds_propagator_params = c.free_h > n * m * n * m;
  return c;
}

double measure_f(const Propagator& u) {
  const Dims& dims = u.dims;
  double denominator = 0.0;
  for (int k = 0; k < dims.n; ++k) {
    denominator += std::norm(u.entry(0, 0, k, 0));
  }
  if (denominator <= kMeasureDenominatorFloor) {
    return std::numeric_limits<double>::infinity();
  }
  double numerator = 0.0;
  for (int l = 1; l < dims.n; ++l) {
    for (int k = 0; k < dims.n; ++k) {
      numerator += std::norm(u.entry(l, 0, k, 0));
    }
  }
  return numerator / denominator;
}

}  // namespace qcool
