// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "urequiv/entropy.hpp"
#include "urequiv/states.hpp"
#include "util.hpp"

using namespace urequiv;

TEST_CASE("renyi_entropy on simple distributions") {
  for (double alpha : {0.3, 0.5, 1.0, 2.0, 5.0}) {
    CHECK(renyi_entropy(ProbDist({1.0, 0.0}), alpha) == doctest::Approx(0.0));
    CHECK(renyi_entropy(ProbDist({0.5, 0.5}), alpha) == doctest::Approx(std::log(2.0)));
  }
  CHECK(renyi_entropy(ProbDist({0.75, 0.25}), 2.0) ==
        doctest::Approx(-std::log(9.0 / 16.0 + 1.0 / 16.0)));
}

TEST_CASE("RenyiIndex rejects non-positive values") {
  CHECK_THROWS_AS(RenyiIndex(0.0), Error);
  CHECK_THROWS_AS(RenyiIndex(-1.0), Error);
}

TEST_CASE("qubit entropy from variance") {
  CHECK(qubit_entropy_from_variance(0.0, 1.0) == doctest::Approx(0.0));
  CHECK(qubit_entropy_from_variance(1.0, 1.0) == doctest::Approx(std::log(2.0)));
  double shannon_3_4 = -(0.75 * std::log(0.75) + 0.25 * std::log(0.25));
  CHECK(qubit_entropy_from_variance(0.75, 1.0) == doctest::Approx(shannon_3_4));
  CHECK_THROWS_AS(qubit_entropy_from_variance(1.5, 1.0), Error);
  CHECK_THROWS_AS(qubit_entropy_from_variance(-0.1, 2.0), Error);
}

TEST_CASE("qubit variance from entropy: endpoints and the alpha=2 closed form") {
  CHECK(qubit_variance_from_entropy(0.0, 1.0) == doctest::Approx(0.0));
  CHECK(qubit_variance_from_entropy(std::log(2.0), 1.0) == doctest::Approx(1.0));
  CHECK(std::abs(qubit_variance_from_entropy(std::log(8.0 / 5.0), 2.0) - 0.75) < 1e-10);
  // g_2(h) = 2 - 2 e^{-h} across the whole range.
  for (int k = 0; k <= 200; ++k) {
    double h = std::log(2.0) * k / 200.0;
    double closed = 2.0 - 2.0 * std::exp(-h);
    REQUIRE(std::abs(qubit_variance_from_entropy(h, 2.0) - closed) < 1e-10);
  }
  CHECK_THROWS_AS(qubit_variance_from_entropy(1.0, 1.0), Error);  // > ln 2
  CHECK_THROWS_AS(qubit_variance_from_entropy(-0.1, 1.0), Error);
}

TEST_CASE("f_alpha is strictly increasing in the variance") {
  for (double alpha : {0.3, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    double prev = -1.0;
    for (int k = 0; k <= 1000; ++k) {
      double v = static_cast<double>(k) / 1000.0;
      double h = qubit_entropy_from_variance(v, alpha);
      REQUIRE(h > prev);
      prev = h;
    }
  }
}

TEST_CASE("inverse round-trips on grids") {
  const double ln2 = std::log(2.0);
  for (double alpha : {0.3, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    for (int k = 0; k <= 300; ++k) {
      double h = ln2 * k / 300.0;
      REQUIRE(std::abs(qubit_entropy_from_variance(
                           qubit_variance_from_entropy(h, alpha), alpha) -
                       h) < 1e-9);
      double v = static_cast<double>(k) / 300.0;
      REQUIRE(std::abs(qubit_variance_from_entropy(
                           qubit_entropy_from_variance(v, alpha), alpha) -
                       v) < 1e-9);
    }
  }
}

TEST_CASE("entropy-variance map agrees with measured qubit entropies") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    DensityMatrix rho = random_mixed(2, rng);
    Observable a = pauli_observable(random_axis(rng));
    double v = variance(rho, a);
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
      double from_map = qubit_entropy_from_variance(std::min(v, 1.0), alpha);
      double direct = renyi_entropy(born_probabilities(rho, a), alpha);
      REQUIRE(std::abs(from_map - direct) < 1e-9);
    }
  }
}

TEST_CASE("Shannon limit is continuous at alpha = 1") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 2 + static_cast<int>(rng.next_u64() % 4);
    ProbDist p = born_probabilities(random_mixed(dim, rng),
                                    Observable(random_hermitian(dim, rng)));
    double h1 = renyi_entropy(p, 1.0);
    REQUIRE(std::abs(renyi_entropy(p, 1.0 + 1e-4) - h1) < 1e-3);
    REQUIRE(std::abs(renyi_entropy(p, 1.0 - 1e-4) - h1) < 1e-3);
  }
}

TEST_CASE("spin-1 collision entropy from variances") {
  CHECK(spin1_collision_entropy_from_variances(0.0, 0.0) == doctest::Approx(0.0));
  // (|1> + |-1>)/sqrt2: p = (1/2, 0, 1/2), V(J) = 1, V(J^2) = 0.
  CHECK(spin1_collision_entropy_from_variances(1.0, 0.0) == doctest::Approx(std::log(2.0)));
  // Maximally mixed spin-1: V(J) = 2/3, V(J^2) = 2/9.
  CHECK(spin1_collision_entropy_from_variances(2.0 / 3.0, 2.0 / 9.0) ==
        doctest::Approx(std::log(3.0)));
  CHECK_THROWS_AS(spin1_collision_entropy_from_variances(2.0, 1.0), Error);
}

TEST_CASE("spin-1 display matches the direct collision entropy") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    DensityMatrix rho = random_mixed(3, rng);
    Observable ja = spin_operator(2, random_axis(rng));
    ComplexMatrix j = ja.matrix();
    ComplexMatrix j2 = j * j;
    double vj = expectation(rho, j2) - std::pow(expectation(rho, j), 2);
    double vj2 = expectation(rho, j2 * j2) - std::pow(expectation(rho, j2), 2);
    double direct = renyi_entropy(born_probabilities(rho, ja), 2.0);
    REQUIRE(std::abs(spin1_collision_entropy_from_variances(vj, vj2) - direct) < 1e-10);
  }
}

namespace {

Spin32Moments moments_of(const DensityMatrix& rho, const Observable& ja) {
  const ComplexMatrix& j = ja.matrix();
  ComplexMatrix j2 = j * j;
  ComplexMatrix j3 = j2 * j;
  Spin32Moments m;
  m.m1 = expectation(rho, j);
  m.m3 = expectation(rho, j3);
  m.m4 = expectation(rho, j3 * j);
  m.var_j = expectation(rho, j2) - m.m1 * m.m1;
  m.var_j2 = m.m4 - std::pow(expectation(rho, j2), 2);
  m.var_j3 = expectation(rho, j3 * j3) - m.m3 * m.m3;
  return m;
}

}  // namespace

TEST_CASE("spin-3/2 collision entropy display") {
  Observable jz = spin_operator(3, {0.0, 0.0, 1.0});

  DensityMatrix top = pure_state(StateVector({1.0, 0.0, 0.0, 0.0}));
  CHECK(spin32_collision_entropy_from_moments(moments_of(top, jz)) == doctest::Approx(0.0));

  ComplexMatrix quarter = ComplexMatrix::identity(4) * Complex(0.25, 0.0);
  DensityMatrix mixed = DensityMatrix::from_matrix(quarter);
  Spin32Moments mm = moments_of(mixed, jz);
  CHECK(mm.var_j == doctest::Approx(5.0 / 4.0));
  CHECK(mm.m4 == doctest::Approx(41.0 / 16.0));
  CHECK(spin32_collision_entropy_from_moments(mm) == doctest::Approx(std::log(4.0)));

  SplitMix64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    DensityMatrix rho = random_mixed(4, rng);
    Observable ja = spin_operator(3, random_axis(rng));
    double direct = renyi_entropy(born_probabilities(rho, ja), 2.0);
    REQUIRE(std::abs(spin32_collision_entropy_from_moments(moments_of(rho, ja)) - direct) <
            1e-9);
  }
}
