// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "urequiv/explorer.hpp"
#include "urequiv/parallel.hpp"
#include "util.hpp"

using namespace urequiv;

namespace {

const std::array<double, 3> kX{1.0, 0.0, 0.0};
const std::array<double, 3> kZ{0.0, 0.0, 1.0};

}  // namespace

TEST_CASE("minimizer recovers the smallest eigenvalue of a quadratic form") {
  SplitMix64 rng(6);
  ComplexMatrix m = random_hermitian(3, rng);
  HermitianOperator h = eigen_decompose(m);
  auto objective = [&](const StateVector& psi) {
    Complex acc = 0.0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) acc += std::conj(psi[r]) * m(r, c) * psi[c];
    return acc.real();
  };
  OptimizationResult res = minimize_over_pure(objective, 3, 16, 1);
  CHECK(std::abs(res.best_value - h.eigenvalues.back()) < 1e-8);
  CHECK(res.converged);
  CHECK(res.evaluations > 0);
}

TEST_CASE("variance of any observable minimizes to zero") {
  Observable ja = spin_operator(2, {0.6, 0.0, 0.8});
  auto objective = [&](const StateVector& psi) { return variance(psi, ja); };
  OptimizationResult res = minimize_over_pure(objective, 3, 16, 2);
  CHECK(std::abs(res.best_value) < 1e-8);
}

TEST_CASE("Shannon sum for a MUB pair minimizes to ln 2") {
  Observable a = pauli_observable(kZ);
  Observable b = pauli_observable(kX);
  auto objective = [&](const StateVector& psi) {
    return renyi_entropy(born_probabilities(psi, a), 1.0) +
           renyi_entropy(born_probabilities(psi, b), 1.0);
  };
  OptimizationResult res = minimize_over_pure(objective, 2, 24, 3);
  CHECK(std::abs(res.best_value - std::log(2.0)) < 1e-6);
}

TEST_CASE("spin-1 variance sum reaches 7/16") {
  Observable jx = spin_operator(2, kX);
  Observable jz = spin_operator(2, kZ);
  auto objective = [&](const StateVector& psi) {
    return variance(psi, jx) + variance(psi, jz);
  };
  OptimizationResult res = minimize_over_pure(objective, 3, 24, 7);
  CHECK(std::abs(res.best_value - 7.0 / 16.0) < 1e-4);
}

TEST_CASE("best_value matches a re-evaluation at best_params") {
  Observable jz = spin_operator(2, kZ);
  auto objective = [&](const StateVector& psi) { return variance(psi, jz); };
  OptimizationResult res = minimize_over_pure(objective, 3, 8, 4);
  std::vector<Complex> amps(3);
  double norm2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    amps[static_cast<std::size_t>(i)] = Complex(res.best_params[static_cast<std::size_t>(i)],
                                                res.best_params[static_cast<std::size_t>(i + 3)]);
    norm2 += std::norm(amps[static_cast<std::size_t>(i)]);
  }
  for (Complex& a : amps) a /= std::sqrt(norm2);
  CHECK(std::abs(objective(StateVector(amps)) - res.best_value) < 1e-10);
}

TEST_CASE("constant objectives are flagged") {
  auto objective = [](const StateVector&) { return 1.0; };
  CHECK_THROWS_AS(minimize_over_pure(objective, 2, 4, 5), Error);
  try {
    minimize_over_pure(objective, 2, 4, 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_objective);
  }
}

TEST_CASE("optimizer runs are deterministic") {
  Observable jx = spin_operator(2, kX);
  Observable jz = spin_operator(2, kZ);
  auto objective = [&](const StateVector& psi) {
    return variance(psi, jx) + variance(psi, jz);
  };
  OptimizationResult a = minimize_over_pure(objective, 3, 8, 42);
  OptimizationResult b = minimize_over_pure(objective, 3, 8, 42);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_params == b.best_params);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("map_region") {
  Observable a = pauli_observable(kZ);

  RegionSample same = map_region(a, a, 500, 10, 1.0);
  CHECK(same.theta_ab_deg == doctest::Approx(0.0));
  CHECK(same.violations == 0);
  for (const RegionPoint& p : same.points) REQUIRE(std::abs(p.h_a - p.h_b) < 1e-9);

  Observable b = pauli_observable(kX);
  RegionSample mub = map_region(a, b, 5000, 11, 1.0);
  CHECK(mub.theta_ab_deg == doctest::Approx(90.0));
  CHECK(mub.violations == 0);
  double min_sum = 1e9;
  for (const RegionPoint& p : mub.points) min_sum = std::min(min_sum, p.h_a + p.h_b);
  CHECK(min_sum >= std::log(2.0) - 1e-6);

  RegionSample again = map_region(a, b, 5000, 11, 1.0);
  for (std::size_t i = 0; i < mub.points.size(); ++i) {
    REQUIRE(again.points[i].h_a == mub.points[i].h_a);
    REQUIRE(again.points[i].h_b == mub.points[i].h_b);
  }

  // 45 degrees: the region detaches from the origin; the entropy sum has a
  // nonzero floor (at least the overlap bound -2 ln cos(22.5 deg)).
  double theta = 45.0 * 3.14159265358979323846 / 180.0;
  Observable b45 = pauli_observable({std::sin(theta), 0.0, std::cos(theta)});
  RegionSample mid = map_region(a, b45, 5000, 13, 1.0);
  CHECK(mid.violations == 0);
  double floor45 = 1e9;
  for (const RegionPoint& p : mid.points) floor45 = std::min(floor45, p.h_a + p.h_b);
  CHECK(floor45 >= -2.0 * std::log(std::cos(theta / 2.0)) - 1e-9);
  CHECK(floor45 > 0.1);

  CHECK_THROWS_AS(map_region(Observable(spin_operator(2, kZ)), Observable(spin_operator(2, kX)),
                             10, 0, 1.0),
                  Error);
}

TEST_CASE("saturate_boundary pins H(A) and lands on the boundary") {
  Observable a = pauli_observable(kZ);
  Observable b = pauli_observable(kX);
  const double ln2 = std::log(2.0);

  OptimizationResult corner = saturate_boundary(a, b, 0.0, 16, 21);
  auto entropies = [&](const OptimizationResult& res, const Observable& oa,
                       const Observable& ob) {
    std::vector<Complex> amps(2);
    double norm2 = 0.0;
    for (int i = 0; i < 2; ++i) {
      amps[static_cast<std::size_t>(i)] = Complex(res.best_params[static_cast<std::size_t>(i)],
                                                  res.best_params[static_cast<std::size_t>(i + 2)]);
      norm2 += std::norm(amps[static_cast<std::size_t>(i)]);
    }
    for (Complex& c : amps) c /= std::sqrt(norm2);
    StateVector psi(amps);
    return std::pair<double, double>{renyi_entropy(born_probabilities(psi, oa), 1.0),
                                     renyi_entropy(born_probabilities(psi, ob), 1.0)};
  };

  auto [ha0, hb0] = entropies(corner, a, b);
  CHECK(std::abs(ha0 - 0.0) < 1e-6);
  CHECK(std::abs(hb0 - ln2) < 1e-5);

  OptimizationResult other = saturate_boundary(a, b, ln2, 16, 22);
  auto [ha1, hb1] = entropies(other, a, b);
  CHECK(std::abs(ha1 - ln2) < 1e-6);
  CHECK(std::abs(hb1 - 0.0) < 1e-5);

  // Interior target at 45 degrees: the point must satisfy the bound with
  // equality.
  double theta = 45.0 * 3.14159265358979323846 / 180.0;
  Observable b45 = pauli_observable({std::sin(theta), 0.0, std::cos(theta)});
  OptimizationResult mid = saturate_boundary(a, b45, 0.3, 16, 23);
  auto [ha2, hb2] = entropies(mid, a, b45);
  CHECK(std::abs(ha2 - 0.3) < 1e-6);
  double kappa = std::abs(0.5 * real_trace_product(a.matrix(), b45.matrix()));
  CHECK(std::abs(qubit_pure_boundary_slack(ha2, hb2, kappa, 1.0, 1.0)) < 1e-5);

  CHECK_THROWS_AS(saturate_boundary(a, b, 2.0, 4, 1), Error);
}

TEST_CASE("scan_violations") {
  RelationRegistry reg = RelationRegistry::standard();
  ScanSummary summary = scan_violations(reg, reg.ids(), 300, 1000);
  REQUIRE(summary.entries.size() == 10);
  for (const ScanEntry& e : summary.entries) {
    CHECK(e.n == 300);
    CHECK(e.violations == 0);
    CHECK(e.worst_slack >= -1e-9);
  }

  ScanSummary empty = scan_violations(reg, {"robertson"}, 0, 0);
  CHECK(empty.entries.size() == 1);
  CHECK(empty.entries[0].n == 0);
  CHECK(empty.entries[0].violations == 0);

  CHECK_THROWS_AS(scan_violations(reg, {"missing"}, 10, 0), Error);

  // Determinism, including across the parallel scheduler.
  ScanSummary a = scan_violations(reg, {"full_qubit"}, 500, 77);
  ScanSummary b = scan_violations(reg, {"full_qubit"}, 500, 77);
  CHECK(a.entries[0].worst_slack == b.entries[0].worst_slack);
}

TEST_CASE("UR_EQUIV_THREADS caps workers without changing results") {
  RelationRegistry reg = RelationRegistry::standard();
  ScanSummary baseline = scan_violations(reg, {"full_qubit"}, 400, 31);

  setenv("UR_EQUIV_THREADS", "3", 1);
  CHECK(thread_count() == 3);
  ScanSummary capped = scan_violations(reg, {"full_qubit"}, 400, 31);
  setenv("UR_EQUIV_THREADS", "1", 1);
  ScanSummary serial = scan_violations(reg, {"full_qubit"}, 400, 31);
  setenv("UR_EQUIV_THREADS", "0", 1);
  CHECK(thread_count() >= 1);  // 0 = auto
  unsetenv("UR_EQUIV_THREADS");

  CHECK(capped.entries[0].worst_slack == baseline.entries[0].worst_slack);
  CHECK(serial.entries[0].worst_slack == baseline.entries[0].worst_slack);
  CHECK(serial.entries[0].violations == baseline.entries[0].violations);
}

TEST_CASE("a corrupted bound is detected by the scan") {
  RelationRegistry reg;
  RelationEntry bad = RelationRegistry::standard().get("maassen_uffink");
  bad.id = "maassen_uffink_corrupted";
  bad.evaluate = [](const RelationContext& ctx) {
    RelationReport r = maassen_uffink(ctx);
    // Injected defect: halve the overlap, i.e. raise the bound by 2 ln 2.
    double corrupted_lhs = r.lhs + 2.0 * std::log(2.0);
    r.lhs = corrupted_lhs;
    r.slack = r.rhs - corrupted_lhs;
    r.satisfied = r.slack >= -1e-9;
    return r;
  };
  reg.add(bad);
  ScanSummary summary = scan_violations(reg, {"maassen_uffink_corrupted"}, 200, 5);
  CHECK(summary.entries[0].violations > 0);
}
