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

// qcool command line tool
//
// Subcommands:
//   scan-f        sample the cooling measure over a time range (CSV + JSON)
//   cool          run the post-selected cooling protocol (JSON report)
//   count-params  closed-form constraint / free-parameter counts
//   verify        run the library invariant suite
//
// Exit codes: 0 success, 1 failed verification, 2 configuration error,
// 3 vanishing post-selection probability.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcool/qcool.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNoOutcome = 3;

struct ModelFlags {
  qcool::ProtocolConfig cfg;
  std::string measure_time = "auto";
  bool s_set = false;
  bool n_max_set = false;
};

void add_model_options(CLI::App* cmd, ModelFlags& flags) {
  cmd->add_option("--model", flags.cfg.model,
                  "Model: toy, damped, transition, jc, or xu")
      ->capture_default_str();
  cmd->add_option("--omega", flags.cfg.omega,
                  "Mode frequency / thermal level spacing")
      ->capture_default_str();
  cmd->add_option("--delta", flags.cfg.delta, "Qubit tunneling amplitude (jc)")
      ->capture_default_str();
  cmd->add_option("--g", flags.cfg.g, "Coupling strength (jc)")
      ->capture_default_str();
  cmd->add_option("--k", flags.cfg.k, "Measure truncation level (jc)")
      ->capture_default_str();
  cmd->add_option("--n-max", flags.cfg.n_max, "Fock levels kept (jc)")
      ->capture_default_str();
  cmd->add_option("--omega1", flags.cfg.omega1,
                  "Ground level energy (transition)")
      ->capture_default_str();
  cmd->add_option("--omega2", flags.cfg.omega2,
                  "Top level energy (transition)")
      ->capture_default_str();
  cmd->add_option("--gamma", flags.cfg.gamma, "Phase shifter angle (xu)")
      ->capture_default_str();
}

void add_scan_options(CLI::App* cmd, ModelFlags& flags) {
  cmd->add_option("--t-min", flags.cfg.scan.t_min, "Scan start time")
      ->capture_default_str();
  cmd->add_option("--t-max", flags.cfg.scan.t_max, "Scan end time")
      ->capture_default_str();
  cmd->add_option("--grid", flags.cfg.scan.grid_points, "Scan grid points")
      ->capture_default_str();
  cmd->add_option("--threshold", flags.cfg.scan.window_threshold,
                  "Sub-threshold window level")
      ->capture_default_str();
}

void finalize_config(ModelFlags& flags) {
  flags.cfg.n_max_explicit = flags.n_max_set;
  if (flags.measure_time == "auto") {
    flags.cfg.measure_time.reset();
  } else {
    try {
      std::size_t used = 0;
      const double t = std::stod(flags.measure_time, &used);
      if (used != flags.measure_time.size()) throw std::invalid_argument("");
      flags.cfg.measure_time = t;
    } catch (const std::exception&) {
      throw qcool::config_error("--t expects a number or 'auto', got '" +
                                flags.measure_time + "'");
    }
  }
  // For the circuit model the gate parameter s is the measurement axis.
  if (flags.cfg.model == "xu" && flags.s_set && !flags.cfg.measure_time) {
    flags.cfg.measure_time = flags.cfg.s;
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qcool::config_error("cannot open output file '" + path + "'");
  out << text;
}

int run_scan_f(const ModelFlags& flags, const std::string& out_path) {
  const qcool::ModelFamily family = qcool::make_model(flags.cfg);
  const qcool::ScanSettings& scan = flags.cfg.scan;
  const qcool::TimeScan result =
      qcool::scan_function(family.f_of_t, scan.t_min, scan.t_max,
                           scan.grid_points, scan.window_threshold);

  std::ostringstream csv;
  qcool::write_scan_csv(csv, result);
  const std::string sidecar = qcool::scan_sidecar_json(result);
  if (out_path.empty()) {
    std::cout << csv.str();
    std::cerr << sidecar << "\n";
  } else {
    write_text(out_path, csv.str());
    write_text(out_path + ".json", sidecar + "\n");
  }
  return kExitOk;
}

int run_cool(const ModelFlags& flags, int repeated,
             const std::string& out_path) {
  std::string text;
  if (repeated > 0) {
    const std::vector<qcool::CoolingReport> trajectory =
        qcool::run_repeated_baseline(flags.cfg, repeated);
    nlohmann::json j = nlohmann::json::array();
    for (const qcool::CoolingReport& report : trajectory) {
      j.push_back(nlohmann::json::parse(qcool::to_json(report)));
    }
    text = j.dump(2);
  } else {
    text = qcool::to_json(qcool::run_one_shot(flags.cfg));
  }
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_text(out_path, text + "\n");
  }
  return kExitOk;
}

int run_count_params(int n, int m, const std::string& out_path) {
  const qcool::ParamCount count =
      qcool::count_free_parameters(qcool::Dims{n, m});
  nlohmann::json j;
  j["n"] = count.n;
  j["m"] = count.m;
  j["constraints"] = count.constraints;
  j["free_u"] = count.free_u;
  j["free_h"] = count.free_h;
  j["free_h_exceeds_propagator_params"] =
      count.free_h_exceeds_propagator_params;
  const std::string text = j.dump(2);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_text(out_path, text + "\n");
  }
  return kExitOk;
}

int run_verify(std::uint64_t seed) {
  const std::vector<qcool::CheckResult> results =
      qcool::run_invariant_suite(seed);
  int failures = 0;
  for (const qcool::CheckResult& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " — "
              << r.detail << "\n";
    if (!r.passed) ++failures;
  }
  std::cout << results.size() - failures << "/" << results.size()
            << " checks passed\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground-state cooling by a single post-selected ancilla "
               "measurement: scans, protocol runs, and self-verification"};
  app.require_subcommand(1);

  ModelFlags scan_flags;
  CLI::App* scan_cmd =
      app.add_subcommand("scan-f", "Sample the cooling measure f over time");
  add_model_options(scan_cmd, scan_flags);
  add_scan_options(scan_cmd, scan_flags);
  std::string scan_out;
  scan_cmd->add_option("--out", scan_out,
                       "CSV output file (sidecar JSON at FILE.json); stdout "
                       "when omitted");

  ModelFlags cool_flags;
  CLI::App* cool_cmd =
      app.add_subcommand("cool", "Run the post-selected cooling protocol");
  add_model_options(cool_cmd, cool_flags);
  add_scan_options(cool_cmd, cool_flags);
  cool_cmd->add_option("--temp", cool_flags.cfg.temp, "Input temperature")
      ->capture_default_str();
  cool_cmd
      ->add_option("--t", cool_flags.measure_time,
                   "Measurement time, or 'auto' for the scan minimum")
      ->capture_default_str();
  cool_cmd->add_option("--s", cool_flags.cfg.s, "Gate parameter s (xu)")
      ->capture_default_str();
  int repeated = 0;
  cool_cmd->add_option(
      "--repeated", repeated,
      "Run the repeated random-interval baseline for N measurements");
  cool_cmd->add_option("--seed", cool_flags.cfg.seed, "Baseline RNG seed")
      ->capture_default_str();
  cool_cmd->add_option("--interval-min", cool_flags.cfg.interval_min,
                       "Baseline interval lower bound")
      ->capture_default_str();
  cool_cmd->add_option("--interval-max", cool_flags.cfg.interval_max,
                       "Baseline interval upper bound")
      ->capture_default_str();
  std::string cool_out;
  cool_cmd->add_option("--out", cool_out,
                       "JSON output file; stdout when omitted");
  cool_cmd->set_config("--config", "",
                       "INI-style key=value file; flags take precedence");

  CLI::App* count_cmd = app.add_subcommand(
      "count-params", "Constraint and free-parameter counts for (n, m)");
  int count_n = 2;
  int count_m = 2;
  count_cmd->add_option("-n,--n", count_n, "Target levels")->required();
  count_cmd->add_option("-m,--m", count_m, "Ancilla levels")->required();
  std::string count_out;
  count_cmd->add_option("--out", count_out,
                        "JSON output file; stdout when omitted");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the full invariant suite");
  std::uint64_t verify_seed = 12345;
  verify_cmd->add_option("--seed", verify_seed, "Suite RNG seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "Run with --help for usage.\n";
    return kExitConfigError;
  }

  try {
    if (scan_cmd->parsed()) {
      finalize_config(scan_flags);
      return run_scan_f(scan_flags, scan_out);
    }
    if (cool_cmd->parsed()) {
      cool_flags.s_set = cool_cmd->count("--s") > 0;
      cool_flags.n_max_set = cool_cmd->count("--n-max") > 0;
      finalize_config(cool_flags);
      return run_cool(cool_flags, repeated, cool_out);
    }
    if (count_cmd->parsed()) {
      return run_count_params(count_n, count_m, count_out);
    }
    return run_verify(verify_seed);
  } catch (const qcool::no_outcome_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoOutcome;
  } catch (const qcool::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}
