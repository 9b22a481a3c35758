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

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "qcool/models.hpp"
#include "qcool/random.hpp"
#include "qcool/scan.hpp"

using namespace qcool;
using namespace qcool::testutil;

TEST_CASE("condition check on the identity") {
  const Propagator u = Propagator::checked(Dims{2, 2}, identity(4), 0.0);
  const ConditionVerdict v = check_cooling_condition(u, 1e-12);
  CHECK_FALSE(v.satisfied);
  CHECK(v.max_violation == doctest::Approx(1.0));
  CHECK(v.violating_l == 1);
  CHECK(v.violating_k == 1);
}

TEST_CASE("condition check on the toy model") {
  CHECK(check_cooling_condition(toy_model(kPi / 2).u, 1e-12).satisfied);
  CHECK(check_cooling_condition(toy_model(kPi / 2).u, 1e-12).max_violation <
        1e-12);
  const ConditionVerdict at_zero =
      check_cooling_condition(toy_model(0.0).u, 1e-12);
  CHECK_FALSE(at_zero.satisfied);
  CHECK(at_zero.max_violation == doctest::Approx(1.0));
}

TEST_CASE("closed-form parameter counts") {
  const ParamCount c22 = count_free_parameters(Dims{2, 2});
  CHECK(c22.constraints == 4);
  CHECK(c22.free_u == 12);
  CHECK(c22.free_h == 22);
  CHECK(c22.free_h_exceeds_propagator_params);

  CHECK(count_free_parameters(Dims{3, 2}).constraints == 12);
  CHECK(count_free_parameters(Dims{2, 3}).free_h == 60);
}

TEST_CASE("parameter counts against enumeration") {
  for (int n = 2; n <= 5; ++n) {
    for (int m = 2; m <= 4; ++m) {
      const ParamCount c = count_free_parameters(Dims{n, m});
      long long equations = 0;
      for (int l = 1; l < n; ++l) {
        for (int k = 0; k < n; ++k) {
          equations += 2;  // one complex entry = two real equations
        }
      }
      CHECK(c.constraints == equations);
      CHECK(c.free_u ==
            static_cast<long long>(n) * m * n * m - c.constraints);
      CHECK(c.free_h == static_cast<long long>(n) * (m - 1) *
                            (2LL * n * (m + 1) - 1));
    }
  }
}

TEST_CASE("measure on the toy model equals cos^2 t") {
  for (int i = 0; i < 100; ++i) {
    const double t = 0.1 * i;
    const double expected = std::cos(t) * std::cos(t);
    CHECK(std::abs(measure_f(toy_model(t).u) - expected) < 1e-13);
  }
}

TEST_CASE("measure on the identity counts the excited levels") {
  for (int n : {2, 3, 5}) {
    const Dims dims{n, 2};
    const Propagator u =
        Propagator::checked(dims, identity(dims.total()), 0.0);
    CHECK(measure_f(u) == doctest::Approx(n - 1.0));
  }
}

TEST_CASE("measure undefined when the ground row empties") {
  // I_A tensor sigma_x moves every ancilla-ground amplitude away.
  const Dims dims{2, 2};
  const Propagator u =
      Propagator::checked(dims, kron(identity(2), pauli_x()), 0.0);
  CHECK(std::isinf(measure_f(u)));
}

TEST_CASE("measure is invariant under a global phase") {
  auto rng = make_rng(31);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  const Dims dims{3, 2};
  for (int rep = 0; rep < 20; ++rep) {
    Propagator u = Propagator::checked(dims, random_unitary(6, rng), 1.0);
    const double f = measure_f(u);
    u.matrix *= std::polar(1.0, angle(rng));
    CHECK(std::abs(measure_f(u) - f) < 1e-12);
  }
}

TEST_CASE("measure reduces to the block ratio for block-diagonal forms") {
  for (double t : {0.3, 1.0, 2.2}) {
    const Propagator u = toy_model(t).u;
    const double expected =
        std::norm(u.entry(1, 0, 1, 0)) / std::norm(u.entry(0, 0, 0, 0));
    CHECK(measure_f(u) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("golden section minimizes a parabola") {
  const GoldenResult r = golden_section_min(
      [](double x) { return (x - 1.3) * (x - 1.3) + 0.25; }, 0.0, 3.0, 1e-9);
  CHECK(std::abs(r.x - 1.3) < 1e-7);
  CHECK(r.f == doctest::Approx(0.25));
}

TEST_CASE("scan locates periodic minima of the toy model") {
  const TimeScan scan = scan_f(
      [](double t) { return toy_model(t).u; }, 0.0, 10.0, 2000, 1e-4);
  REQUIRE(scan.minima.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(scan.minima[static_cast<std::size_t>(k)].t -
                   (kPi / 2 + k * kPi)) < 1e-5);
    CHECK(scan.minima[static_cast<std::size_t>(k)].f < 1e-10);
  }
  // Every window hugs one optimal instant.
  REQUIRE(scan.windows.size() == 3);
  for (int k = 0; k < 3; ++k) {
    const auto& w = scan.windows[static_cast<std::size_t>(k)];
    CHECK(w.t_start <= kPi / 2 + k * kPi);
    CHECK(w.t_end >= kPi / 2 + k * kPi);
  }
}

TEST_CASE("scan of the damped model finds the steady window") {
  const TimeScan scan = scan_f(
      [](double t) { return damped_model(t).u; }, 0.0, 10.0, 2000, 1e-4);
  REQUIRE(scan.windows.size() == 1);
  CHECK(std::abs(scan.windows.front().t_start - std::log(50 * kPi)) < 0.01);
  CHECK(scan.windows.front().t_end == 10.0);
  CHECK(scan.minima.empty());  // strictly decreasing measure
}

TEST_CASE("scan on constant identity finds nothing") {
  const Propagator u = Propagator::checked(Dims{2, 2}, identity(4), 0.0);
  const TimeScan scan =
      scan_f([&](double) { return u; }, 0.0, 5.0, 200, 1e-4);
  CHECK(scan.minima.empty());
  CHECK(scan.windows.empty());
  CHECK(scan.undefined_times.empty());
}

TEST_CASE("scan records undefined samples and skips them") {
  // Undefined (infinite) at grid points below t = 1, defined beyond.
  const TimeScan scan = scan_function(
      [](double t) {
        return t < 1.0 ? std::numeric_limits<double>::infinity()
                       : (t - 2.0) * (t - 2.0);
      },
      0.0, 4.0, 401, 1e-4);
  CHECK(scan.undefined_times.size() == 100);
  REQUIRE(scan.minima.size() == 1);
  CHECK(std::abs(scan.minima.front().t - 2.0) < 1e-5);
}

TEST_CASE("scan argument validation") {
  auto f = [](double) { return 1.0; };
  CHECK_THROWS_AS(scan_function(f, 1.0, 1.0, 100, 1e-4),
                  std::invalid_argument);
  CHECK_THROWS_AS(scan_function(f, 0.0, 1.0, 1, 1e-4),
                  std::invalid_argument);
}
