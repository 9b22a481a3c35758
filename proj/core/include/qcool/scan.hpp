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

#include <functional>
#include <vector>

#include "qcool/condition.hpp"

namespace qcool {

struct GoldenResult {
  double x = 0.0;
  double f = 0.0;
};

/// Golden-section minimization of f on [a, b], terminating when the bracket
/// is narrower than x_tol.
GoldenResult golden_section_min(const std::function<double(double)>& f,
                                double a, double b, double x_tol = 1e-6);

/// Result of a time-domain scan of a scalar measure.
struct TimeScan {
  struct Minimum {
    double t = 0.0;
    double f = 0.0;
  };
  struct Window {
    double t_start = 0.0;
    double t_end = 0.0;
  };

  std::vector<double> times;
  std::vector<double> f_values;  // +infinity marks undefined samples
  /// Grid-local minima refined by golden-section search, ordered by time.
  std::vector<Minimum> minima;
  /// Maximal disjoint grid runs with f below the threshold, ordered by time.
  std::vector<Window> windows;
  /// Grid times where the measure was undefined.
  std::vector<double> undefined_times;
};

/// Samples f_of_t on a uniform grid of grid_points times covering
/// [t_min, t_max], refines every interior strict local minimum by
/// golden-section search to the given time resolution, and collects maximal
/// sub-threshold windows. Undefined samples (+infinity) are recorded and
/// excluded from minima. Throws std::invalid_argument for an empty range or
/// fewer than two grid points.
TimeScan scan_function(const std::function<double(double)>& f_of_t,
                       double t_min, double t_max, int grid_points,
                       double window_threshold,
                       double time_resolution = 1e-6);

/// Scan of the cooling measure f for a propagator family.
TimeScan scan_f(const std::function<Propagator(double)>& u_of_t, double t_min,
                double t_max, int grid_points, double window_threshold);

}  // namespace qcool
