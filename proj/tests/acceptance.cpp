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

// Acceptance suite: ten end-to-end criteria with pinned tolerances, one
// PASS/FAIL line each. Usage: qcool_acceptance <path-to-qcool-cli>.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qcool/qcool.hpp"

namespace {

using namespace qcool;

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int criterion, const std::string& name, bool passed,
            const std::string& detail) {
  std::cout << (passed ? "PASS" : "FAIL") << " criterion " << criterion
            << " (" << name << "): " << detail << "\n";
  if (!passed) ++g_failures;
}

std::string g_cli_path;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// 1. The constant-Hamiltonian model has measure cos^2(t) to machine
//    precision and cools exactly at t = pi/2 + k pi.
void criterion_1() {
  double worst_f = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = 10.0 * i / 999.0;
    const double f = measure_f(toy_model(t).u);
    worst_f = std::max(worst_f, std::abs(f - std::cos(t) * std::cos(t)));
  }
  double worst_violation = 0.0;
  for (int k = 0; k < 3; ++k) {
    const ConditionVerdict v =
        check_cooling_condition(toy_model(kPi / 2 + k * kPi).u, 1e-12);
    worst_violation = std::max(worst_violation, v.max_violation);
    if (!v.satisfied) worst_violation = std::max(worst_violation, 1.0);
  }
  std::ostringstream os;
  os << "max |f - cos^2 t| = " << worst_f << " (tol 1e-12), max violation at "
     << "optimal instants = " << worst_violation << " (tol 1e-12)";
  report(1, "toy-model exactness", worst_f <= 1e-12 && worst_violation <= 1e-12,
         os.str());
}

// 2. The damped model's f < 1e-4 window opens at ln(50 pi) and the measure
//    decreases monotonically past t = 1.
void criterion_2() {
  const TimeScan scan = scan_f(
      [](double t) { return damped_model(t).u; }, 0.0, 10.0, 2000, 1e-4);
  const double expected_start = std::log(50.0 * kPi);
  bool window_ok = false;
  double start = std::numeric_limits<double>::quiet_NaN();
  if (scan.windows.size() == 1) {
    start = scan.windows.front().t_start;
    window_ok = std::abs(start - expected_start) <= 0.01 &&
                scan.windows.front().t_end == 10.0;
  }
  bool monotone = true;
  for (std::size_t i = 1; i < scan.times.size(); ++i) {
    if (scan.times[i - 1] > 1.0 &&
        scan.f_values[i] > scan.f_values[i - 1] + 1e-15) {
      monotone = false;
    }
  }
  std::ostringstream os;
  os << "window start " << start << " vs ln(50 pi) = " << expected_start
     << " (tol 0.01), monotone past t=1: " << (monotone ? "yes" : "no");
  report(2, "damped-model steady window", window_ok && monotone, os.str());
}

// 3. The resonant oscillator scan puts the optimal measurement instant at
//    t = 150 +- 1 with the truncated measure 0.04 +- 0.005 there.
void criterion_3() {
  const JCParams params{1.0, 1.0, 0.2, 12};
  const TimeScan scan = scan_function(
      [&](double t) { return jc_f_k(t, params, 3); }, 0.0, 200.0, 2000, 1e-4);
  double best_t = 0.0;
  double best_f = std::numeric_limits<double>::infinity();
  for (const TimeScan::Minimum& m : scan.minima) {
    if (m.f < best_f) {
      best_f = m.f;
      best_t = m.t;
    }
  }
  const double f_at_150 = jc_f_k(150.0, params, 3);
  const bool ok = std::abs(best_t - 150.0) <= 1.0 &&
                  std::abs(f_at_150 - 0.04) <= 0.005 && best_f <= 0.045;
  std::ostringstream os;
  os << "global minimum f = " << best_f << " at t = " << best_t
     << " (expect t = 150 +- 1), f(150) = " << f_at_150
     << " (expect 0.04 +- 0.005)";
  report(3, "oscillator optimal instant", ok, os.str());
}

// 4. The closed-form success bound evaluates to 0.9396 +- 0.002 at the
//    operating point and the simulated success probability dominates it.
void criterion_4() {
  const JCParams params{1.0, 1.0, 0.2, 12};
  const double rhs = jc_success_bound(150.0, params, 1.0, 3);

  ProtocolConfig cfg;
  cfg.model = "jc";
  cfg.measure_time = 150.0;
  cfg.temp = 1.0;
  cfg.n_max = 12;  // at least 12 levels; the tail rule may raise it
  const CoolingReport run = run_one_shot(cfg);

  const bool ok = std::abs(rhs - 0.9396) <= 0.002 && run.p_c >= rhs &&
                  run.p_c >= 0.93;
  std::ostringstream os;
  os << "bound " << rhs << " (expect 0.9396 +- 0.002), simulated P_c = "
     << run.p_c << " >= bound and >= 0.93";
  report(4, "success probability bound", ok, os.str());
}

// 5. The four-gate circuit cools exactly at (s, gamma) = (pi/2, 0) and its
//    excited-to-ground corner vanishes structurally everywhere.
void criterion_5() {
  const ConditionVerdict v =
      check_cooling_condition(xu_circuit(kPi / 2, 0.0), 1e-12);
  auto rng = make_rng(99);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  double worst_corner = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const Propagator u = xu_circuit(angle(rng), angle(rng));
    worst_corner = std::max(worst_corner, std::abs(u.entry(1, 0, 0, 0)));
  }
  const bool ok = v.satisfied && v.max_violation <= 1e-12 &&
                  worst_corner <= 1e-14;
  std::ostringstream os;
  os << "violation at (pi/2, 0) = " << v.max_violation
     << " (tol 1e-12), max |U_{1,g;0,g}| over 100 random (s, gamma) = "
     << worst_corner;
  report(5, "circuit cooling point", ok, os.str());
}

// 6. Every model family satisfies H = i dU/dt U^dag against its constructed
//    Hamiltonian at 20 random times.
void criterion_6() {
  auto rng = make_rng(1234);
  std::uniform_real_distribution<double> times(0.5, 9.5);
  double worst = 0.0;
  std::string worst_model = "-";
  for (const char* name : {"toy", "damped", "transition", "jc", "xu"}) {
    ProtocolConfig cfg;
    cfg.model = name;
    cfg.n_max = 12;
    cfg.n_max_explicit = true;
    const ModelFamily family = make_model(cfg);
    for (int rep = 0; rep < 20; ++rep) {
      const double t = times(rng);
      const double dev = max_abs_diff(
          hamiltonian_from_propagator(family.propagator, t),
          family.hamiltonian(t));
      if (dev > worst) {
        worst = dev;
        worst_model = name;
      }
    }
  }
  std::ostringstream os;
  os << "max |H_reconstructed - H| = " << worst << " (tol 1e-7, worst: "
     << worst_model << ")";
  report(6, "inverse-engineering consistency", worst <= 1e-7, os.str());
}

// 7. The closed-form oscillator propagator matches the numeric matrix
//    exponential entry-wise.
void criterion_7() {
  const JCParams params{1.0, 1.0, 0.2, 12};
  const ComplexMatrix h = jc_hamiltonian(params);
  double worst = 0.0;
  for (double t : {1.0, 50.0, 150.0}) {
    worst = std::max(worst, max_abs_diff(jc_propagator_analytic(t, params).matrix,
                                         expm_hermitian(h, t)));
  }
  std::ostringstream os;
  os << "max entry deviation = " << worst << " (tol 1e-8)";
  report(7, "analytic vs numeric propagator", worst <= 1e-8, os.str());
}

// 8. Constraint counts equal brute-force enumeration and the closed forms.
void criterion_8() {
  bool ok = true;
  std::string detail = "all (n, m) in [2,5] x [2,4]";
  for (int n = 2; n <= 5 && ok; ++n) {
    for (int m = 2; m <= 4 && ok; ++m) {
      const ParamCount c = count_free_parameters(Dims{n, m});
      long long enumerated = 0;
      for (int l = 1; l < n; ++l) {
        for (int k = 0; k < n; ++k) enumerated += 2;
      }
      const long long nm = static_cast<long long>(n) * m;
      const bool match =
          c.constraints == enumerated && c.constraints == 2LL * n * n - 2 * n &&
          c.free_u == nm * nm - enumerated &&
          c.free_u == n * (static_cast<long long>(n) * (m * m - 2) + 2) &&
          c.free_h == static_cast<long long>(n) * (m - 1) *
                          (2LL * n * (m + 1) - 1);
      if (!match) {
        ok = false;
        detail = "mismatch at n=" + std::to_string(n) +
                 ", m=" + std::to_string(m);
      }
    }
  }
  report(8, "parameter-counting oracle", ok, detail);
}

// 9. Probabilities are nonnegative and complete for random inputs, and the
//    conditional success stays in [0, 1].
void criterion_9() {
  auto rng = make_rng(4321);
  double worst_sum = 0.0;
  double worst_negative = 0.0;
  bool pc_ok = true;
  for (int rep = 0; rep < 100; ++rep) {
    const Dims dims{2 + rep % 5, 2};  // target levels 2..6, qubit ancilla
    const Propagator u =
        Propagator::checked(dims, random_unitary(dims.total(), rng), 1.0);
    const DensityOperator rho = random_density(dims.n, rng);
    const ComplexMatrix evolved = u.matrix *
                                  embed_with_ancilla(rho, dims).matrix() *
                                  u.matrix.adjoint();
    double total = 0.0;
    for (int flat = 0; flat < dims.total(); ++flat) {
      const double p = evolved(flat, flat).real();
      worst_negative = std::min(worst_negative, p);
      total += p;
    }
    worst_sum = std::max(worst_sum, std::abs(total - 1.0));
    const double pc = cooling_success(u, rho);
    if (!(pc >= 0.0 && pc <= 1.0 + 1e-12)) pc_ok = false;
  }
  const bool ok = worst_sum <= 1e-10 && worst_negative >= -1e-12 && pc_ok;
  std::ostringstream os;
  os << "max |sum - 1| = " << worst_sum
     << " (tol 1e-10), most negative outcome = " << worst_negative
     << ", success in [0,1]: " << (pc_ok ? "yes" : "no");
  report(9, "probability completeness", ok, os.str());
}

// 10. Scans are byte-deterministic across runs.
void criterion_10() {
  const std::string args =
      " scan-f --model jc --t-max 200 --grid 20000 --out ";
  const int rc1 =
      std::system((g_cli_path + args + "acceptance_scan_1.csv").c_str());
  const int rc2 =
      std::system((g_cli_path + args + "acceptance_scan_2.csv").c_str());
  const std::string a = slurp("acceptance_scan_1.csv");
  const std::string b = slurp("acceptance_scan_2.csv");
  const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b &&
                  a.rfind("t,f\n", 0) == 0;
  std::ostringstream os;
  os << "two runs, " << a.size() << " bytes each, byte-identical: "
     << (a == b ? "yes" : "no");
  report(10, "scan determinism", ok, os.str());
  std::remove("acceptance_scan_1.csv");
  std::remove("acceptance_scan_2.csv");
  std::remove("acceptance_scan_1.csv.json");
  std::remove("acceptance_scan_2.csv.json");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: qcool_acceptance <path-to-qcool-cli>\n";
    return 64;
  }
  g_cli_path = argv[1];

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();

  std::cout << (10 - g_failures) << "/10 criteria passed\n";
  return g_failures;
}
