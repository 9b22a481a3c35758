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

#include "qcool/scan.hpp"

#include <cmath>
#include <stdexcept>

namespace qcool {

GoldenResult golden_section_min(const std::function<double(double)>& f,
                                double a, double b, double x_tol) {
  if (!(a < b) || !(x_tol > 0.0)) {
    throw std::invalid_argument("golden_section_min: bad bracket");
  }
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double h = b - a;
  double c = b - invphi * h;
  double d = a + invphi * h;
  double fc = f(c);
  double fd = f(d);
  while (h > x_tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      h = b - a;
      c = b - invphi * h;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      h = b - a;
      d = a + invphi * h;
      fd = f(d);
    }
  }
  return fc < fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

TimeScan scan_function(const std::function<double(double)>& f_of_t,
                       double t_min, double t_max, int grid_points,
                       double window_threshold, double time_resolution) {
  if (!(t_min < t_max)) {
    throw std::invalid_argument("scan_function: need t_min < t_max");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("scan_function: need at least 2 grid points");
  }

  TimeScan scan;
  scan.times.reserve(static_cast<std::size_t>(grid_points));
  scan.f_values.reserve(static_cast<std::size_t>(grid_points));
  const double step = (t_max - t_min) / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i) {
    const double t = (i == grid_points - 1) ? t_max : t_min + i * step;
    const double f = f_of_t(t);
    scan.times.push_back(t);
    scan.f_values.push_back(f);
    if (std::isinf(f)) scan.undefined_times.push_back(t);
  }

  // Interior strict grid minima, refined within the neighbor bracket. A
  // refinement never reports worse than the grid sample that triggered it.
  for (int i = 1; i + 1 < grid_points; ++i) {
    const double fl = scan.f_values[static_cast<std::size_t>(i - 1)];
    const double fc = scan.f_values[static_cast<std::size_t>(i)];
    const double fr = scan.f_values[static_cast<std::size_t>(i + 1)];
    if (!std::isfinite(fc) || !std::isfinite(fl) || !std::isfinite(fr)) {
      continue;
    }
    if (fl > fc && fc < fr) {
      GoldenResult refined = golden_section_min(
          f_of_t, scan.times[static_cast<std::size_t>(i - 1)],
          scan.times[static_cast<std::size_t>(i + 1)], time_resolution);
      if (!(refined.f <= fc)) {
        refined = {scan.times[static_cast<std::size_t>(i)], fc};
      }
      scan.minima.push_back({refined.x, refined.f});
    }
  }

  // Maximal runs of consecutive sub-threshold samples.
  int run_start = -1;
  for (int i = 0; i <= grid_points; ++i) {
    const bool below =
        i < grid_points &&
        scan.f_values[static_cast<std::size_t>(i)] < window_threshold;
    if (below && run_start < 0) {
      run_start = i;
    } else if (!below && run_start >= 0) {
      scan.windows.push_back({scan.times[static_cast<std::size_t>(run_start)],
                              scan.times[static_cast<std::size_t>(i - 1)]});
      run_start = -1;
    }
  }
  return scan;
}

TimeScan scan_f(const std::function<Propagator(double)>& u_of_t, double t_min,
                double t_max, int grid_points, double window_threshold) {
  return scan_function([&](double t) { return measure_f(u_of_t(t)); }, t_min,
                       t_max, grid_points, window_threshold);
}

}  // namespace qcool
