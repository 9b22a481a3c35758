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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcool/jaynes_cummings.hpp"
#include "qcool/models.hpp"
#include "qcool/scan.hpp"

namespace qcool {

/// Thrown for invalid protocol configuration (unknown model, bad ranges,
/// inconsistent parameters). The CLI maps it to exit code 2.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanSettings {
  double t_min = 0.0;
  double t_max = 10.0;
  int grid_points = 2000;
  double window_threshold = 1e-4;
};

/// Full description of a protocol run. Only the parameters of the selected
/// model are consulted.
struct ProtocolConfig {
  /// One of "toy", "damped", "transition", "jc", "xu".
  std::string model = "toy";

  // jc parameters (omega doubles as the thermal level spacing everywhere)
  double omega = 1.0;
  double delta = 1.0;
  double g = 0.2;
  int n_max = 12;
  bool n_max_explicit = false;  // true skips the tail-mass auto bump
  int k = 3;                    // truncation of the jc measure f_k

  // transition-model level energies
  double omega1 = 1.0;
  double omega2 = 1.0;

  // xu-circuit parameters; s is this model's measurement axis
  double s = 1.5707963267948966;
  double gamma = 0.0;

  double temp = 1.0;

  /// Measurement time; empty means "auto" (global scan minimum, ties broken
  /// by the earliest time).
  std::optional<double> measure_time;

  ScanSettings scan;

  // repeated-measurement baseline
  std::uint64_t seed = 0;
  double interval_min = 0.1;
  double interval_max = 10.0;
};

/// Uniform interface over the five concrete models.
struct ModelFamily {
  Dims dims;
  /// Evolution from 0 to t (for "xu" the gate parameter s plays this role).
  std::function<Propagator(double)> propagator;
  /// Generator of the family at time t.
  std::function<ComplexMatrix(double)> hamiltonian;
  /// Measure used for scans and reports; the truncated f_k for "jc",
  /// the full cooling measure otherwise.
  std::function<double(double)> f_of_t;
};

/// Builds the model family selected by cfg.model.
/// Throws config_error for an unknown model or invalid parameters.
ModelFamily make_model(const ProtocolConfig& cfg);

/// Thermal input state matching cfg (level count n_max for "jc", the target
/// dimension otherwise; n_max is bumped to keep the truncated tail mass
/// below 1e-6 unless n_max_explicit is set).
DensityOperator input_state(const ProtocolConfig& cfg);

/// Outcome of a post-selected cooling run.
struct CoolingReport {
  double p_g = 0.0;              // ancilla ground outcome probability
  double p_c = 0.0;              // conditional target ground probability
  double ground_fidelity = 0.0;  // <0| rho_final |0>
  std::vector<double> populations;
  double f_at_measurement = 0.0;
  std::optional<double> bound_rhs;  // success bound (jc model only)

  friend bool operator==(const CoolingReport&, const CoolingReport&) = default;
};

std::string to_json(const CoolingReport& report, int indent = 2);
CoolingReport cooling_report_from_json(const std::string& text);

/// Picks the measurement time for "auto" mode: the scan's global minimum,
/// with ties (within 1e-12) broken by the earliest time.
double auto_measure_time(const ModelFamily& family, const ScanSettings& scan);

/// One evolution, one post-selected ancilla-ground measurement.
/// Throws no_outcome_error when the ground outcome probability vanishes.
CoolingReport run_one_shot(const ProtocolConfig& cfg);

/// Baseline protocol: repeat (evolve for a random interval, re-prepare the
/// ancilla in |g>, post-select the ground outcome) n_measurements times.
/// Intervals are drawn uniformly from [interval_min, interval_max] with the
/// seeded engine. Each report carries the cumulative survival probability in
/// p_g and the running target state in the remaining fields. The trajectory
/// is cut short once the cumulative survival drops below 1e-15.
std::vector<CoolingReport> run_repeated_baseline(const ProtocolConfig& cfg,
                                                 int n_measurements);

/// CSV with header "t,f", one grid sample per row, 17 significant digits.
void write_scan_csv(std::ostream& out, const TimeScan& scan);

/// JSON document with the scan's minima, windows, and undefined times.
std::string scan_sidecar_json(const TimeScan& scan, int indent = 2);

}  // namespace qcool
