// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "urequiv/relations.hpp"

namespace urequiv {

struct RegionPoint {
  double h_a;
  double h_b;
  double purity;
};

struct RegionSample {
  double theta_ab_deg = 0.0;
  std::vector<RegionPoint> points;
  long violations = 0;
};

/// Samples n Haar pure qubit states (state i from seed + i), records
/// (H_alpha(A), H_alpha(B), purity) and counts violations of the governing
/// pure-qubit bound at slack -1e-9. Unit-Pauli observables required.
RegionSample map_region(const Observable& a, const Observable& b, long n,
                        std::uint64_t seed, RenyiIndex alpha);

struct OptimizationResult {
  double best_value = 0.0;
  std::vector<double> best_params;
  int restarts = 0;
  long evaluations = 0;
  bool converged = false;
};

/// Multi-start Nelder-Mead over 2*dim unconstrained reals mapped to a unit
/// complex state (normalize; near-zero vectors are penalized). Restart r
/// starts from gaussians seeded with seed + r; the best restart wins, ties
/// to the lowest index, so parallel and serial runs agree. Converged when
/// the simplex diameter falls below 1e-10.
OptimizationResult minimize_over_pure(
    const std::function<double(const StateVector&)>& objective, int dim,
    int restarts, std::uint64_t seed);

/// Minimizes H1(B) subject to |H1(A) - target_ha| < 1e-6 via a quadratic
/// penalty (weight 1e6, refined at 1e8 from the stage-one optimum). The
/// resulting point sits on the boundary of the allowed (H_A, H_B) region.
OptimizationResult saturate_boundary(const Observable& a, const Observable& b,
                                     double target_ha, int restarts,
                                     std::uint64_t seed);

struct ScanEntry {
  std::string id;
  long n = 0;
  double worst_slack = 0.0;  // equalities report -residual here
  long violations = 0;
};

struct ScanSummary {
  std::vector<ScanEntry> entries;
};

/// Evaluates each relation on n sampled contexts (relation r, sample i uses
/// seed + r*n + i; ranges are disjoint) and tallies worst slack and
/// violation counts. Deterministic per seed for any thread count.
ScanSummary scan_violations(const RelationRegistry& registry,
                            const std::vector<std::string>& relation_ids,
                            long n, std::uint64_t seed);

}  // namespace urequiv
