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

#include "qcool/selfcheck.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qcool/expm.hpp"
#include "qcool/integrator.hpp"
#include "qcool/protocol.hpp"
#include "qcool/random.hpp"

namespace qcool {

namespace {

std::string deviation(double value, double bound) {
  std::ostringstream os;
  os << "max deviation " << value << " (bound " << bound << ")";
  return os.str();
}

CheckResult bounded(std::string name, double value, double bound) {
  return CheckResult{std::move(name), value <= bound, deviation(value, bound)};
}

double pi() { return std::numbers::pi; }

CheckResult expm_group_property(std::mt19937_64& rng) {
  double worst = 0.0;
  std::uniform_real_distribution<double> times(-3.0, 3.0);
  for (int dim : {2, 4, 8}) {
    for (int rep = 0; rep < 4; ++rep) {
      const ComplexMatrix h = random_hermitian(dim, rng);
      const double t1 = times(rng);
      const double t2 = times(rng);
      const ComplexMatrix lhs =
          expm_hermitian(h, t1) * expm_hermitian(h, t2);
      worst = std::max(worst, max_abs_diff(lhs, expm_hermitian(h, t1 + t2)));
    }
  }
  return bounded("expm group property", worst, 1e-9);
}

CheckResult expm_unitarity(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int dim : {2, 6, 16}) {
    const ComplexMatrix h = random_hermitian(dim, rng);
    worst = std::max(worst, unitarity_defect(expm_hermitian(h, 1.7)));
  }
  return bounded("expm output unitary", worst, 1e-10);
}

CheckResult integrator_vs_expm(std::mt19937_64& rng) {
  const ComplexMatrix h = random_hermitian(4, rng);
  const ComplexMatrix u =
      integrate_schrodinger([&](double) { return h; }, 3.0, 1e-3);
  return bounded("RK4 matches expm for constant H",
                 max_abs_diff(u, expm_hermitian(h, 3.0)), 1e-6);
}

CheckResult thermal_state_validity() {
  // Construction already validates trace / Hermiticity / positivity.
  try {
    thermal_state({1.0, 0.0, 4});
    thermal_state({1.0, 1.0, 4});
    thermal_state({1.0, std::numeric_limits<double>::infinity(), 4});
    const auto rho = thermal_state({1.0, 1.0, 4});
    const double p0 = rho.matrix()(0, 0).real();
    const double expected = 1.0 / (1.0 + std::exp(-1.0) + std::exp(-2.0) +
                                   std::exp(-3.0));
    return bounded("thermal state weights", std::abs(p0 - expected), 1e-12);
  } catch (const std::exception& e) {
    return CheckResult{"thermal state weights", false, e.what()};
  }
}

CheckResult probability_completeness(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const Dims dims{2 + rep % 4, 2};
    const Propagator u = Propagator::checked(
        dims, random_unitary(dims.total(), rng), 1.0);
    const DensityOperator rho = random_density(dims.n, rng);
    const DensityOperator joint = embed_with_ancilla(rho, dims);
    const ComplexMatrix evolved =
        u.matrix * joint.matrix() * u.matrix.adjoint();
    double sum = 0.0;
    for (int flat = 0; flat < dims.total(); ++flat) {
      sum += evolved(flat, flat).real();
    }
    worst = std::max(worst, std::abs(sum - 1.0));
    const double pc = cooling_success(u, rho);
    if (pc < 0.0 || pc > 1.0 + 1e-12) {
      return CheckResult{"probability completeness", false,
                         "cooling success outside [0, 1]"};
    }
  }
  return bounded("probability completeness", worst, 1e-10);
}

CheckResult outcome_probability_paths(std::mt19937_64& rng) {
  double worst = 0.0;
  const Dims dims{3, 2};
  for (int rep = 0; rep < 10; ++rep) {
    const Propagator u = Propagator::checked(
        dims, random_unitary(dims.total(), rng), 1.0);
    const DensityOperator rho = random_diagonal_density(dims.n, rng);
    for (int l = 0; l < dims.n; ++l) {
      double direct = 0.0;
      for (int k = 0; k < dims.n; ++k) {
        direct += rho.matrix()(k, k).real() * std::norm(u.entry(l, 0, k, 0));
      }
      worst = std::max(worst,
                       std::abs(outcome_probability(u, rho, l) - direct));
    }
  }
  return bounded("outcome probability code paths", worst, 1e-12);
}

CheckResult measure_condition_consistency() {
  const Propagator at_opt = toy_model(pi() / 2).u;
  const Propagator away = toy_model(0.3).u;
  const bool ok = measure_f(at_opt) < 1e-12 &&
                  check_cooling_condition(at_opt, 1e-12).satisfied &&
                  measure_f(away) > 1e-3 &&
                  !check_cooling_condition(away, 1e-12).satisfied;
  return CheckResult{"measure f vanishes iff condition holds", ok,
                     ok ? "toy model at pi/2 vs 0.3" : "inconsistent"};
}

CheckResult measure_phase_invariance(std::mt19937_64& rng) {
  double worst = 0.0;
  const Dims dims{3, 2};
  std::uniform_real_distribution<double> angle(0.0, 2 * pi());
  for (int rep = 0; rep < 10; ++rep) {
    Propagator u = Propagator::checked(dims, random_unitary(dims.total(), rng),
                                       1.0);
    const double f0 = measure_f(u);
    u.matrix *= std::polar(1.0, angle(rng));
    worst = std::max(worst, std::abs(measure_f(u) - f0));
  }
  return bounded("measure f global-phase invariant", worst, 1e-12);
}

CheckResult parameter_count_enumeration() {
  for (int n = 2; n <= 5; ++n) {
    for (int m = 2; m <= 4; ++m) {
      const ParamCount c = count_free_parameters(Dims{n, m});
      // Two real equations per complex entry U_{l,g;k,g}, l >= 1.
      long long enumerated = 0;
      for (int l = 1; l < n; ++l) {
        for (int k = 0; k < n; ++k) enumerated += 2;
      }
      const long long total = static_cast<long long>(n) * m * n * m;
      if (c.constraints != enumerated || c.free_u != total - enumerated) {
        return CheckResult{"parameter counting enumeration", false,
                           "mismatch at n=" + std::to_string(n) +
                               ", m=" + std::to_string(m)};
      }
    }
  }
  return CheckResult{"parameter counting enumeration", true,
                     "all (n, m) in [2,5] x [2,4]"};
}

CheckResult scan_locates_toy_minima() {
  const TimeScan scan = scan_f(
      [](double t) { return toy_model(t).u; }, 0.0, 10.0, 2000, 1e-4);
  double worst = std::numeric_limits<double>::infinity();
  if (scan.minima.size() == 3) {
    worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      worst = std::max(worst,
                       std::abs(scan.minima[static_cast<std::size_t>(k)].t -
                                (pi() / 2 + k * pi())));
    }
  }
  return bounded("scan finds periodic optimal times", worst, 1e-5);
}

CheckResult su2_structure(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * pi());
  double worst = 0.0;
  for (int rep = 0; rep < 8; ++rep) {
    const double phi = angle(rng);
    const double psi = angle(rng);
    const Eigen::Vector3d axis(std::sin(phi) * std::cos(psi),
                               std::sin(phi) * std::sin(psi), std::cos(phi));
    const SU2Control ctrl = constant_axis_control(
        [](double t) { return 0.7 * t; }, [](double) { return 0.7; }, axis);
    const double t = angle(rng);
    worst = std::max(worst, unitarity_defect(su2_propagator(ctrl, t)));
    const ComplexMatrix h = su2_hamiltonian(ctrl, t);
    worst = std::max(worst, hermiticity_defect(h));
    worst = std::max(worst, std::abs(h.trace()));
  }
  return bounded("su2 blocks unitary / Hermitian traceless", worst, 1e-12);
}

CheckResult model_hamiltonian_consistency(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> times(0.5, 9.5);
  double worst = 0.0;
  for (const char* name : {"toy", "damped", "transition", "jc", "xu"}) {
    ProtocolConfig cfg;
    cfg.model = name;
    const ModelFamily family = make_model(cfg);
    for (int rep = 0; rep < 5; ++rep) {
      const double t = times(rng);
      const ComplexMatrix h =
          hamiltonian_from_propagator(family.propagator, t);
      worst = std::max(worst, max_abs_diff(h, family.hamiltonian(t)));
    }
  }
  return bounded("models satisfy H = i dU/dt U^dag", worst, 1e-7);
}

CheckResult jc_analytic_vs_numeric() {
  const JCParams params{1.0, 1.0, 0.2, 10};
  double worst = 0.0;
  const ComplexMatrix h = jc_hamiltonian(params);
  for (double t : {1.0, 17.0, 50.0}) {
    worst = std::max(worst, max_abs_diff(jc_propagator_analytic(t, params).matrix,
                                         expm_hermitian(h, t)));
  }
  return bounded("jc analytic propagator matches expm", worst, 1e-8);
}

CheckResult jc_bound_below_simulation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> times(1.0, 200.0);
  double worst = -std::numeric_limits<double>::infinity();
  for (double temp : {0.5, 1.0, 2.0}) {
    ProtocolConfig cfg;
    cfg.model = "jc";
    cfg.temp = temp;
    const ModelFamily family = make_model(cfg);
    const DensityOperator rho = input_state(cfg);
    const JCParams params{cfg.omega, cfg.delta, cfg.g,
                          family.dims.n};
    for (int rep = 0; rep < 7; ++rep) {
      const double t = times(rng);
      const double pc = cooling_success(family.propagator(t), rho);
      const double rhs = jc_success_bound(t, params, temp, cfg.k);
      worst = std::max(worst, rhs - pc);
    }
  }
  return bounded("jc success bound below simulated success", worst, 0.0);
}

CheckResult jc_measure_monotone_in_k() {
  const JCParams params{1.0, 1.0, 0.2, 12};
  double worst = 0.0;
  for (double t : {3.0, 42.0, 150.0}) {
    for (int k = 1; k + 1 < params.n_max; ++k) {
      worst = std::max(worst,
                       jc_f_k(t, params, k) - jc_f_k(t, params, k + 1));
    }
  }
  return bounded("jc truncated measure nondecreasing in k", worst, 0.0);
}

CheckResult report_round_trip() {
  ProtocolConfig cfg;
  cfg.model = "jc";
  cfg.measure_time = 150.0;
  const CoolingReport report = run_one_shot(cfg);
  const bool ok = cooling_report_from_json(to_json(report)) == report;
  return CheckResult{"cooling report JSON round-trip", ok,
                     ok ? "bit-exact" : "mismatch after parse"};
}

CheckResult baseline_single_step_consistency() {
  ProtocolConfig cfg;
  cfg.model = "toy";
  cfg.measure_time = pi() / 2;
  cfg.interval_min = pi() / 2;
  cfg.interval_max = pi() / 2;
  const CoolingReport one_shot = run_one_shot(cfg);
  const std::vector<CoolingReport> base = run_repeated_baseline(cfg, 1);
  const bool ok = base.size() == 1 && base.front() == one_shot;
  return CheckResult{"baseline with one fixed interval matches one-shot", ok,
                     ok ? "exact match" : "reports differ"};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed) {
  std::mt19937_64 rng = make_rng(seed);
  std::vector<CheckResult> results;
  results.push_back(expm_group_property(rng));
  results.push_back(expm_unitarity(rng));
  results.push_back(integrator_vs_expm(rng));
  results.push_back(thermal_state_validity());
  results.push_back(probability_completeness(rng));
  results.push_back(outcome_probability_paths(rng));
  results.push_back(measure_condition_consistency());
  results.push_back(measure_phase_invariance(rng));
  results.push_back(parameter_count_enumeration());
  results.push_back(scan_locates_toy_minima());
  results.push_back(su2_structure(rng));
  results.push_back(model_hamiltonian_consistency(rng));
  results.push_back(jc_analytic_vs_numeric());
  results.push_back(jc_bound_below_simulation(rng));
  results.push_back(jc_measure_monotone_in_k());
  results.push_back(report_round_trip());
  results.push_back(baseline_single_step_consistency());
  return results;
}

}  // namespace qcool
