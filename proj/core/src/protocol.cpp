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

#include "qcool/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include <json.hpp>

namespace qcool {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kSurvivalFloor = 1e-15;

JCParams jc_params(const ProtocolConfig& cfg, int n_max) {
  return JCParams{cfg.omega, cfg.delta, cfg.g, n_max};
}

int effective_jc_levels(const ProtocolConfig& cfg) {
  int n_max = cfg.n_max;
  if (!cfg.n_max_explicit && cfg.temp > 0.0) {
    n_max = std::max(n_max, suggested_levels(cfg.omega, cfg.temp));
  }
  return n_max;
}

void require_valid(const ScanSettings& scan) {
  if (!(scan.t_min < scan.t_max)) {
    throw config_error("scan range requires t_min < t_max");
  }
  if (scan.grid_points < 2) {
    throw config_error("scan grid needs at least 2 points");
  }
  if (!(scan.window_threshold > 0.0)) {
    throw config_error("window threshold must be positive");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ModelFamily make_model(const ProtocolConfig& cfg) {
  require_valid(cfg.scan);
  if (cfg.temp < 0.0) throw config_error("temp must be nonnegative");

  if (cfg.model == "toy") {
    return ModelFamily{
        Dims{2, 2},
        [](double t) { return toy_model(t).u; },
        [](double t) { return toy_model(t).h; },
        [](double t) { return measure_f(toy_model(t).u); },
    };
  }
  if (cfg.model == "damped") {
    return ModelFamily{
        Dims{2, 2},
        [](double t) { return damped_model(t).u; },
        [](double t) { return damped_model(t).h; },
        [](double t) { return measure_f(damped_model(t).u); },
    };
  }
  if (cfg.model == "transition") {
    const double w1 = cfg.omega1;
    const double w2 = cfg.omega2;
    return ModelFamily{
        Dims{2, 2},
        [w1, w2](double t) { return transition_model(w1, w2, t).u; },
        [w1, w2](double t) { return transition_model(w1, w2, t).h; },
        [w1, w2](double t) {
          return measure_f(transition_model(w1, w2, t).u);
        },
    };
  }
  if (cfg.model == "jc") {
    const int n_max = effective_jc_levels(cfg);
    const JCParams params = jc_params(cfg, n_max);
    require_valid(params);
    if (cfg.k < 1 || cfg.k >= n_max) {
      throw config_error("jc: need 1 <= k < n_max");
    }
    const int k = cfg.k;
    return ModelFamily{
        Dims{n_max, 2},
        [params](double t) { return jc_propagator_analytic(t, params); },
        [params](double) { return jc_hamiltonian(params); },
        [params, k](double t) { return jc_f_k(t, params, k); },
    };
  }
  if (cfg.model == "xu") {
    const double gamma = cfg.gamma;
    return ModelFamily{
        Dims{2, 2},
        [gamma](double s) { return xu_circuit(s, gamma); },
        [](double) { return xu_generator(); },
        [gamma](double s) { return measure_f(xu_circuit(s, gamma)); },
    };
  }
  throw config_error("unknown model '" + cfg.model +
                     "' (expected toy, damped, transition, jc, or xu)");
}

DensityOperator input_state(const ProtocolConfig& cfg) {
  int levels = 2;
  if (cfg.model == "jc") levels = effective_jc_levels(cfg);
  return thermal_state(ThermalSpec{cfg.omega, cfg.temp, levels});
}

double auto_measure_time(const ModelFamily& family, const ScanSettings& scan) {
  require_valid(scan);
  const TimeScan result =
      scan_function(family.f_of_t, scan.t_min, scan.t_max, scan.grid_points,
                    scan.window_threshold);
  std::vector<TimeScan::Minimum> candidates;
  candidates.reserve(result.times.size() + result.minima.size());
  for (std::size_t i = 0; i < result.times.size(); ++i) {
    if (std::isfinite(result.f_values[i])) {
      candidates.push_back({result.times[i], result.f_values[i]});
    }
  }
  candidates.insert(candidates.end(), result.minima.begin(),
                    result.minima.end());
  if (candidates.empty()) {
    throw config_error("auto measurement time: measure undefined everywhere");
  }
  double best_f = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) best_f = std::min(best_f, c.f);
  double best_t = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) {
    if (c.f <= best_f + kTieTolerance) best_t = std::min(best_t, c.t);
  }
  return best_t;
}

namespace {

CoolingReport report_at(const ModelFamily& family, const ProtocolConfig& cfg,
                        const DensityOperator& rho, double t) {
  const Propagator u = family.propagator(t);
  const MeasureResult m = measure_ancilla_ground(u, rho);
  CoolingReport report;
  report.p_g = m.p_g;
  report.p_c = cooling_success(u, rho);
  report.ground_fidelity = m.rho_a_post.matrix()(0, 0).real();
  report.populations = m.rho_a_post.diagonal();
  report.f_at_measurement = family.f_of_t(t);
  if (cfg.model == "jc") {
    const JCParams params = jc_params(cfg, effective_jc_levels(cfg));
    if (cfg.temp > 0.0) {
      report.bound_rhs = jc_success_bound(t, params, cfg.temp, cfg.k);
    }
  }
  return report;
}

}  // namespace

CoolingReport run_one_shot(const ProtocolConfig& cfg) {
  const ModelFamily family = make_model(cfg);
  const DensityOperator rho = input_state(cfg);
  const double t = cfg.measure_time ? *cfg.measure_time
                                    : auto_measure_time(family, cfg.scan);
  return report_at(family, cfg, rho, t);
}

std::vector<CoolingReport> run_repeated_baseline(const ProtocolConfig& cfg,
                                                 int n_measurements) {
  if (n_measurements < 1) {
    throw config_error("repeated baseline needs at least one measurement");
  }
  if (!(cfg.interval_min > 0.0) || !(cfg.interval_min <= cfg.interval_max)) {
    throw config_error("repeated baseline needs 0 < interval_min <= interval_max");
  }
  const ModelFamily family = make_model(cfg);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> interval(cfg.interval_min,
                                                  cfg.interval_max);

  DensityOperator rho = input_state(cfg);
  double survival = 1.0;
  std::vector<CoolingReport> trajectory;
  trajectory.reserve(static_cast<std::size_t>(n_measurements));
  for (int step = 0; step < n_measurements; ++step) {
    const double dt = interval(rng);
    const Propagator u = family.propagator(dt);
    MeasureResult m = [&]() -> MeasureResult {
      try {
        return measure_ancilla_ground(u, rho);
      } catch (const no_outcome_error&) {
        return MeasureResult{0.0, rho};
      }
    }();
    if (m.p_g == 0.0) break;  // dead end, return the partial trajectory
    survival *= m.p_g;

    CoolingReport report;
    report.p_g = survival;  // cumulative survival probability
    report.p_c = cooling_success(u, rho);
    report.ground_fidelity = m.rho_a_post.matrix()(0, 0).real();
    report.populations = m.rho_a_post.diagonal();
    report.f_at_measurement = family.f_of_t(dt);
    trajectory.push_back(std::move(report));

    rho = std::move(m.rho_a_post);
    if (survival < kSurvivalFloor) break;  // partial trajectory
  }
  return trajectory;
}

std::string to_json(const CoolingReport& report, int indent) {
  nlohmann::json j;
  j["p_g"] = report.p_g;
  j["p_c"] = report.p_c;
  j["ground_fidelity"] = report.ground_fidelity;
  j["populations"] = report.populations;
  j["f_at_measurement"] = report.f_at_measurement;
  if (report.bound_rhs) {
    j["bound_rhs"] = *report.bound_rhs;
  } else {
    j["bound_rhs"] = nullptr;
  }
  return j.dump(indent);
}

CoolingReport cooling_report_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  CoolingReport report;
  report.p_g = j.at("p_g").get<double>();
  report.p_c = j.at("p_c").get<double>();
  report.ground_fidelity = j.at("ground_fidelity").get<double>();
  report.populations = j.at("populations").get<std::vector<double>>();
  report.f_at_measurement = j.at("f_at_measurement").get<double>();
  if (!j.at("bound_rhs").is_null()) {
    report.bound_rhs = j.at("bound_rhs").get<double>();
  }
  return report;
}

void write_scan_csv(std::ostream& out, const TimeScan& scan) {
  out << "t,f\n";
  for (std::size_t i = 0; i < scan.times.size(); ++i) {
    out << format_double(scan.times[i]) << ',' << format_double(scan.f_values[i])
        << '\n';
  }
}

std::string scan_sidecar_json(const TimeScan& scan, int indent) {
  nlohmann::json j;
  j["minima"] = nlohmann::json::array();
  for (const TimeScan::Minimum& m : scan.minima) {
    j["minima"].push_back({{"t", m.t}, {"f", m.f}});
  }
  j["windows"] = nlohmann::json::array();
  for (const TimeScan::Window& w : scan.windows) {
    j["windows"].push_back({{"t_start", w.t_start}, {"t_end", w.t_end}});
  }
  j["undefined_times"] = scan.undefined_times;
  return j.dump(indent);
}

}  // namespace qcool
