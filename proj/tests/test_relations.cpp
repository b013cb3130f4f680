// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "urequiv/relations.hpp"
#include "util.hpp"

using namespace urequiv;
using test_util::sigma_x;

namespace {

RelationContext qubit_ctx(DensityMatrix rho, const std::array<double, 3>& na,
                          const std::array<double, 3>& nb) {
  return RelationContext{std::move(rho), {pauli_observable(na), pauli_observable(nb)}, {1.0, 1.0}};
}

const std::array<double, 3> kX{1.0, 0.0, 0.0};
const std::array<double, 3> kY{0.0, 1.0, 0.0};
const std::array<double, 3> kZ{0.0, 0.0, 1.0};

}  // namespace

TEST_CASE("robertson") {
  DensityMatrix ket0 = pure_state(StateVector({1.0, 0.0}));
  RelationReport r = robertson(qubit_ctx(ket0, kX, kY));
  CHECK(r.lhs == doctest::Approx(1.0));  // |<sigma_z>|
  CHECK(r.rhs == doctest::Approx(1.0));  // dA dB
  CHECK(r.satisfied);

  RelationReport mixed = robertson(qubit_ctx(qubit_from_bloch(kZ, 0.0), kX, kY));
  CHECK(mixed.lhs == doctest::Approx(0.0));
  CHECK(mixed.rhs == doctest::Approx(1.0));
  CHECK(mixed.satisfied);
}

TEST_CASE("maassen_uffink") {
  DensityMatrix ket0 = pure_state(StateVector({1.0, 0.0}));
  RelationReport r = maassen_uffink(qubit_ctx(ket0, kZ, kX));
  CHECK(r.lhs == doctest::Approx(std::log(2.0)));
  CHECK(r.rhs == doctest::Approx(std::log(2.0)));
  CHECK(r.satisfied);

  RelationReport same = maassen_uffink(qubit_ctx(ket0, kZ, kZ));
  CHECK(same.lhs == doctest::Approx(0.0));
  CHECK(same.satisfied);
}

TEST_CASE("mu_variance_form") {
  DensityMatrix ket0 = pure_state(StateVector({1.0, 0.0}));
  RelationReport r = mu_variance_form(qubit_ctx(ket0, kZ, kX));
  CHECK(r.lhs == doctest::Approx(0.5));  // 1^1 * 0^0 * sqrt(1/2)^... = 1/2
  CHECK(r.rhs == doctest::Approx(0.5));  // c^2 for a MUB pair
  CHECK(r.satisfied);

  // dA^2 = dB^2 = 1 gives lhs = 1/4 <= c^2 always (c >= 1/sqrt2 for qubits).
  RelationReport mixed = mu_variance_form(qubit_ctx(qubit_from_bloch(kZ, 0.0), kZ, kX));
  CHECK(mixed.lhs == doctest::Approx(0.25));
  CHECK(mixed.satisfied);

  CHECK_THROWS_AS(mu_variance_form(RelationContext{
                      qubit_from_bloch(kZ, 0.0),
                      {Observable(sigma_x() * Complex(2.0, 0.0)), pauli_observable(kZ)},
                      {}}),
                  Error);
}

TEST_CASE("mu_variance_form is the exponential of the Shannon relation") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    RelationContext ctx{random_mixed(2, rng),
                        {pauli_observable(random_axis(rng)), pauli_observable(random_axis(rng))},
                        {1.0, 1.0}};
    RelationReport mv = mu_variance_form(ctx);
    RelationReport mu = maassen_uffink(ctx);
    REQUIRE(std::abs(std::log(mv.lhs) + mu.rhs) < 1e-9);
    REQUIRE(mv.satisfied == mu.satisfied);
  }
}

TEST_CASE("majorization_variance") {
  DensityMatrix ket0 = pure_state(StateVector({1.0, 0.0}));
  RelationReport r = majorization_variance(qubit_ctx(ket0, kZ, kX));
  CHECK(r.lhs == doctest::Approx(2.0));  // dA^2 = 0, dB^2 = 1
  CHECK(r.rhs == doctest::Approx(std::pow(1.0 + 1.0 / std::sqrt(2.0), 2)));
  CHECK(r.satisfied);

  RelationReport mixed = majorization_variance(qubit_ctx(qubit_from_bloch(kZ, 0.0), kZ, kX));
  CHECK(mixed.lhs == doctest::Approx(1.0));
  CHECK(mixed.satisfied);
}

TEST_CASE("full_qubit_bound reduces to the simple pure-state form") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    DensityMatrix rho = pure_state(random_pure(2, rng));
    RelationContext ctx{rho,
                        {pauli_observable(random_axis(rng)), pauli_observable(random_axis(rng))},
                        {1.0, 1.0}};
    RelationReport full = full_qubit_bound(ctx);
    RelationReport simple = qubit_simple_bound(ctx);
    REQUIRE(std::abs(full.slack - simple.slack) < 1e-10);
    REQUIRE(full.satisfied);
    REQUIRE(simple.satisfied);
  }
}

TEST_CASE("full_qubit_bound holds on mixed states for several index pairs") {
  SplitMix64 rng(37);
  const double grid[3] = {0.5, 1.0, 2.0};
  for (int trial = 0; trial < 1000; ++trial) {
    RelationContext ctx{random_mixed(2, rng),
                        {pauli_observable(random_axis(rng)), pauli_observable(random_axis(rng))},
                        {grid[rng.next_u64() % 3], grid[rng.next_u64() % 3]}};
    RelationReport r = full_qubit_bound(ctx);
    REQUIRE(r.slack >= -1e-9);
  }
}

TEST_CASE("theta = 90 degrees turns the pure bound into g(A) + g(B) >= 1") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    RelationContext ctx{pure_state(random_pure(2, rng)),
                        {pauli_observable(kZ), pauli_observable(kX)},
                        {1.0, 1.0}};
    RelationReport r = qubit_simple_bound(ctx);
    double u = qubit_variance_from_entropy(
        renyi_entropy(born_probabilities(ctx.rho, ctx.obs[0]), 1.0), 1.0);
    double v = qubit_variance_from_entropy(
        renyi_entropy(born_probabilities(ctx.rho, ctx.obs[1]), 1.0), 1.0);
    REQUIRE(u + v >= 1.0 - 1e-9);
    REQUIRE(r.satisfied);
  }
}

TEST_CASE("qubit_simple_bound rejects mixed states") {
  CHECK_THROWS_AS(qubit_simple_bound(qubit_ctx(qubit_from_bloch(kZ, 0.5), kZ, kX)), Error);
}

TEST_CASE("pauli_triple_equality") {
  DensityMatrix ket0 = pure_state(StateVector({1.0, 0.0}));
  RelationContext ctx{ket0, {}, {1.0, 1.0, 1.0}};
  RelationReport r = pauli_triple_equality(ctx);
  CHECK(r.is_equality);
  CHECK(r.lhs == doctest::Approx(2.0));  // variances (1, 1, 0)
  CHECK(r.rhs == doctest::Approx(2.0));  // 4 - 2 Tr[rho^2]
  CHECK(r.residual < 1e-9);
  CHECK(r.satisfied);

  RelationContext mixed{qubit_from_bloch(kZ, 0.0), {}, {1.0, 1.0, 1.0}};
  RelationReport m = pauli_triple_equality(mixed);
  CHECK(m.lhs == doctest::Approx(3.0));
  CHECK(m.rhs == doctest::Approx(3.0));
  CHECK(m.satisfied);

  // Mixed Renyi indices still give an equality.
  RelationContext indices{random_mixed(2, std::uint64_t{5}), {}, {0.5, 2.0, 3.0}};
  CHECK(pauli_triple_equality(indices).residual < 1e-9);
}

TEST_CASE("pauli_collision_equality") {
  DensityMatrix ket0 = pure_state(StateVector({1.0, 0.0}));
  RelationReport r = pauli_collision_equality(RelationContext{ket0, {}, {}});
  CHECK(r.lhs == doctest::Approx(2.0));  // 1/2 + 1/2 + 1
  CHECK(r.rhs == doctest::Approx(2.0));  // 1 + Tr[rho^2]
  CHECK(r.residual < 1e-10);

  for (int seed = 0; seed < 500; ++seed) {
    RelationReport rep = pauli_collision_equality(
        RelationContext{random_mixed(2, static_cast<std::uint64_t>(seed)), {}, {}});
    REQUIRE(rep.residual < 1e-10);
  }
}

TEST_CASE("puchala bound constant") {
  double c = puchala_bound(1.0 / std::sqrt(2.0));
  CHECK(std::abs(4.0 * std::exp(-c) - (25.0 / 8.0 - 1.0 / std::sqrt(2.0))) < 1e-12);
  CHECK(puchala_bound(1.0) == doctest::Approx(0.0));
}

TEST_CASE("spin-1 collision and variance bounds") {
  Observable jx = spin_operator(2, kX);
  Observable jz = spin_operator(2, kZ);

  RelationContext ctx{random_mixed(3, std::uint64_t{11}), {jx, jz}, {2.0, 2.0}};
  RelationReport var = spin1_variance_bound(ctx);
  CHECK(std::abs(var.rhs - (25.0 / 8.0 - 1.0 / std::sqrt(2.0))) < 1e-12);
  CHECK(var.satisfied);

  // a = b: c_ab = 1 so the bound is 4, always satisfiable.
  RelationContext same{random_mixed(3, std::uint64_t{12}), {jz, jz}, {2.0, 2.0}};
  CHECK(spin1_variance_bound(same).rhs == doctest::Approx(4.0));
  CHECK(spin1_collision_bound(same).lhs == doctest::Approx(0.0));

  for (int seed = 0; seed < 1000; ++seed) {
    RelationContext c{random_mixed(3, static_cast<std::uint64_t>(seed)), {jx, jz}, {2.0, 2.0}};
    REQUIRE(spin1_collision_bound(c).slack >= -1e-9);
    REQUIRE(spin1_variance_bound(c).slack >= -1e-9);
  }

  CHECK_THROWS_AS(spin1_collision_bound(qubit_ctx(qubit_from_bloch(kZ, 0.0), kZ, kX)), Error);
  try {
    spin1_variance_bound(qubit_ctx(qubit_from_bloch(kZ, 0.0), kZ, kX));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_spin_one);
  }
}

TEST_CASE("equalities hold on random mixed states") {
  SplitMix64 rng(202);
  for (int trial = 0; trial < 500; ++trial) {
    RelationContext ctx{random_mixed(2, rng), {}, {1.0, 1.0, 1.0}};
    REQUIRE(pauli_triple_equality(ctx).residual < 1e-9);
    REQUIRE(pauli_collision_equality(ctx).residual < 1e-9);
  }
}

TEST_CASE("registry") {
  RelationRegistry reg = RelationRegistry::standard();
  std::vector<std::string> expected{
      "robertson",      "maassen_uffink", "mu_variance",     "majorization_variance",
      "full_qubit",     "qubit_simple",   "pauli_triple",    "pauli_collision",
      "spin1_collision", "spin1_variance"};
  CHECK(reg.ids() == expected);
  CHECK(reg.contains("robertson"));
  CHECK_FALSE(reg.contains("nope"));
  CHECK_THROWS_AS(reg.get("nope"), Error);
  try {
    reg.get("nope");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_relation);
  }

  // Every registered sampler produces a context its evaluator accepts.
  for (const std::string& id : reg.ids()) {
    const RelationEntry& entry = reg.get(id);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      RelationReport rep = entry.evaluate(entry.sample(seed));
      REQUIRE(rep.satisfied);
    }
  }
}
