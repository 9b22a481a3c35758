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
#include <stdexcept>

#include "helpers.hpp"
#include "qcool/models.hpp"
#include "qcool/random.hpp"

using namespace qcool;
using namespace qcool::testutil;

TEST_CASE("flat index convention") {
  const Dims dims{3, 2};
  CHECK(dims.total() == 6);
  CHECK(dims.flat(0, 0) == 0);
  CHECK(dims.flat(1, 0) == 2);
  CHECK(dims.flat(2, 1) == 5);
  const BasisIndex idx = BasisIndex::from_flat(5, dims);
  CHECK(idx.l == 2);
  CHECK(idx.alpha == 1);
  CHECK_THROWS_AS(require_valid(Dims{1, 2}), std::invalid_argument);
}

TEST_CASE("density operator validation") {
  CHECK_THROWS_AS(DensityOperator(ComplexMatrix(2.0 * identity(2))),
                  std::invalid_argument);  // trace 4
  CHECK_THROWS_AS(DensityOperator(ComplexMatrix(pauli_x())),
                  std::invalid_argument);  // trace 0
  ComplexMatrix negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityOperator(negative), std::invalid_argument);
  ComplexMatrix skew(2, 2);
  skew << 0.5, Complex(0, 0.1), Complex(0, 0.1), 0.5;
  CHECK_THROWS_AS(DensityOperator(skew), std::invalid_argument);
}

TEST_CASE("thermal state at zero, finite, and infinite temperature") {
  const DensityOperator zero = thermal_state({1.0, 0.0, 4});
  CHECK(zero.matrix()(0, 0).real() == 1.0);
  CHECK(max_abs(ComplexMatrix(zero.matrix() -
                              ComplexMatrix(identity(4).col(0) *
                                            identity(4).row(0)))) == 0.0);

  // Direct summation oracle for omega = T = 1, four levels.
  const DensityOperator rho = thermal_state({1.0, 1.0, 4});
  double z = 0.0;
  for (int l = 0; l < 4; ++l) z += std::exp(-l);
  for (int l = 0; l < 4; ++l) {
    CHECK(std::abs(rho.matrix()(l, l).real() - std::exp(-l) / z) < 1e-15);
  }
  CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.6439).epsilon(1e-4));
  CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.2369).epsilon(1e-4));
  CHECK(rho.matrix()(2, 2).real() == doctest::Approx(0.0871).epsilon(1e-3));
  CHECK(rho.matrix()(3, 3).real() == doctest::Approx(0.0321).epsilon(1e-3));

  const DensityOperator hot =
      thermal_state({1.0, std::numeric_limits<double>::infinity(), 4});
  for (int l = 0; l < 4; ++l) {
    CHECK(hot.matrix()(l, l).real() == doctest::Approx(0.25));
  }

  CHECK_THROWS_AS(thermal_state({1.0, 1.0, 0}), std::invalid_argument);
}

TEST_CASE("suggested truncation keeps the tail below the target") {
  const int levels = suggested_levels(1.0, 1.0);
  CHECK(levels >= 12);
  const double z = 1.0 / (1.0 - std::exp(-1.0));
  CHECK(std::exp(-static_cast<double>(levels)) / z < 1e-6);
  CHECK(std::exp(-static_cast<double>(levels - 1)) / z >= 1e-6);
  CHECK(suggested_levels(1.0, 0.0) == 2);
}

TEST_CASE("embed_with_ancilla") {
  const Dims dims{2, 2};
  ComplexMatrix pure = ComplexMatrix::Zero(2, 2);
  pure(0, 0) = 1.0;
  const DensityOperator embedded =
      embed_with_ancilla(DensityOperator(pure), dims);
  CHECK(embedded.matrix()(0, 0).real() == 1.0);
  CHECK(max_abs(embedded.matrix()) == 1.0);

  ComplexMatrix mixed = ComplexMatrix::Zero(2, 2);
  mixed(0, 0) = 0.7;
  mixed(1, 1) = 0.3;
  const DensityOperator joint =
      embed_with_ancilla(DensityOperator(mixed), dims);
  CHECK(joint.matrix()(0, 0).real() == doctest::Approx(0.7));
  CHECK(joint.matrix()(2, 2).real() == doctest::Approx(0.3));
  CHECK(joint.matrix()(1, 1).real() == 0.0);
  CHECK(joint.matrix()(3, 3).real() == 0.0);

  auto rng = make_rng(21);
  const DensityOperator rho = random_density(3, rng);
  const DensityOperator wide = embed_with_ancilla(rho, Dims{3, 3});
  CHECK(wide.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(embed_with_ancilla(rho, Dims{2, 2}), std::invalid_argument);
}

TEST_CASE("outcome_probability identity propagator") {
  const Dims dims{2, 2};
  ComplexMatrix mixed = ComplexMatrix::Zero(2, 2);
  mixed(0, 0) = 0.7;
  mixed(1, 1) = 0.3;
  const DensityOperator rho(mixed);
  const Propagator u = Propagator::checked(dims, identity(4), 0.0);
  CHECK(outcome_probability(u, rho, 0) == doctest::Approx(0.7));
  CHECK(outcome_probability(u, rho, 1) == doctest::Approx(0.3));
  CHECK_THROWS_AS(outcome_probability(u, rho, 2), std::out_of_range);
  CHECK_THROWS_AS(outcome_probability(u, rho, -1), std::out_of_range);
}

TEST_CASE("outcome_probability vanishes at the optimal instant") {
  const Propagator u = toy_model(kPi / 2).u;
  const DensityOperator rho = thermal_state({1.0, 1.0, 2});
  CHECK(outcome_probability(u, rho, 1) < 1e-30);
}

TEST_CASE("outcome_probability agrees with the index-arithmetic oracle") {
  auto rng = make_rng(22);
  const Dims dims{2, 2};
  for (int rep = 0; rep < 20; ++rep) {
    const Propagator u =
        Propagator::checked(dims, random_unitary(4, rng), 1.0);
    const DensityOperator rho = random_diagonal_density(2, rng);
    for (int l = 0; l < dims.n; ++l) {
      double expected = 0.0;
      for (int k = 0; k < dims.n; ++k) {
        expected += rho.matrix()(k, k).real() *
                    std::norm(u.matrix(l * dims.m, k * dims.m));
      }
      CHECK(std::abs(outcome_probability(u, rho, l) - expected) < 1e-12);
    }
  }
}

TEST_CASE("outcome_probability general path matches explicit sum on "
          "diagonal states") {
  auto rng = make_rng(23);
  const Dims dims{3, 2};
  for (int rep = 0; rep < 10; ++rep) {
    const Propagator u =
        Propagator::checked(dims, random_unitary(6, rng), 1.0);
    // Same diagonal state built once with and once without explicit zeros in
    // the off-diagonal entries; both must route to the same value.
    const DensityOperator diag = random_diagonal_density(3, rng);
    ComplexMatrix perturbed = diag.matrix();
    perturbed(0, 1) = perturbed(1, 0) = 1e-12;  // forces the general path
    const DensityOperator nearly(perturbed);
    for (int l = 0; l < dims.n; ++l) {
      CHECK(std::abs(outcome_probability(u, diag, l) -
                     outcome_probability(u, nearly, l)) < 1e-10);
    }
  }
}

TEST_CASE("measure_ancilla_ground identity evolution") {
  const Dims dims{2, 2};
  auto rng = make_rng(24);
  const DensityOperator rho = random_density(2, rng);
  const Propagator u = Propagator::checked(dims, identity(4), 0.0);
  const MeasureResult m = measure_ancilla_ground(u, rho);
  CHECK(m.p_g == doctest::Approx(1.0).epsilon(1e-12));
  check_matrix_near(m.rho_a_post.matrix(), rho.matrix(), 1e-12);
}

TEST_CASE("measure_ancilla_ground cools the toy model exactly") {
  const Propagator u = toy_model(kPi / 2).u;
  const DensityOperator rho = thermal_state({1.0, 1.0, 2});
  const double p0 = rho.matrix()(0, 0).real();
  const MeasureResult m = measure_ancilla_ground(u, rho);
  CHECK(m.p_g == doctest::Approx(p0).epsilon(1e-12));
  CHECK(m.rho_a_post.matrix()(0, 0).real() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(m.rho_a_post.matrix()(1, 1)) < 1e-12);
}

TEST_CASE("measure_ancilla_ground reports no outcome instead of dividing") {
  // Start in the excited level; the swap block moves all of it to |1,e>.
  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(1, 1) = 1.0;
  const Propagator u = toy_model(kPi / 2).u;
  CHECK_THROWS_AS(measure_ancilla_ground(u, DensityOperator(excited)),
                  no_outcome_error);
}

TEST_CASE("ancilla outcome probabilities are complete") {
  auto rng = make_rng(25);
  for (int rep = 0; rep < 10; ++rep) {
    const Dims dims{2 + rep % 3, 2 + rep % 2};
    const Propagator u =
        Propagator::checked(dims, random_unitary(dims.total(), rng), 1.0);
    const DensityOperator rho = random_density(dims.n, rng);
    const ComplexMatrix evolved = u.matrix *
                                  embed_with_ancilla(rho, dims).matrix() *
                                  u.matrix.adjoint();
    double total = 0.0;
    for (int flat = 0; flat < dims.total(); ++flat) {
      const double p = evolved(flat, flat).real();
      CHECK(p > -1e-12);
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("cooling_success") {
  const Dims dims{4, 2};
  const DensityOperator rho = thermal_state({1.0, 1.0, 4});
  const Propagator u = Propagator::checked(dims, identity(8), 0.0);
  CHECK(cooling_success(u, rho) == doctest::Approx(0.6439).epsilon(1e-4));

  CHECK(cooling_success(toy_model(kPi / 2).u, thermal_state({1.0, 1.0, 2})) ==
        doctest::Approx(1.0).epsilon(1e-12));

  auto rng = make_rng(26);
  for (int rep = 0; rep < 10; ++rep) {
    const Propagator random_u =
        Propagator::checked(dims, random_unitary(8, rng), 1.0);
    const double pc = cooling_success(random_u, random_density(4, rng));
    CHECK(pc >= 0.0);
    CHECK(pc <= 1.0 + 1e-12);
  }
}
