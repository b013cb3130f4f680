// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "urequiv/error.hpp"
#include "urequiv/observables.hpp"

namespace urequiv {

/// Renyi index alpha > 0. Within |alpha - 1| < 1e-6 every consumer switches
/// to the Shannon limit, so the family is continuous across alpha = 1.
struct RenyiIndex {
  double value;
  RenyiIndex(double v) : value(v) {  // NOLINT: implicit by design
    if (!(v > 0.0)) fail(ErrorCode::argument_out_of_range, "Renyi index must be positive");
  }
  bool shannon() const { return value > 1.0 - 1e-6 && value < 1.0 + 1e-6; }
};

/// H_alpha(p) = ln(sum_j p_j^alpha) / (1 - alpha) in nats;
/// Shannon -sum p ln p at alpha ~ 1 (0 ln 0 := 0).
double renyi_entropy(const ProbDist& p, RenyiIndex alpha);

/// Qubit map f_alpha: normalized variance v = dA^2/lambda^2 in [0,1] to
/// entropy, via a_pm = (1 +- sqrt(1-v))/2. Strictly increasing;
/// f(0) = 0, f(1) = ln 2.
double qubit_entropy_from_variance(double v, RenyiIndex alpha);

/// Inverse map g_alpha = f_alpha^{-1}, by bisection on [0, 1] to
/// |f(v) - h| < 1e-12. For alpha = 2 it matches the closed form
/// g_2 = 2 - 2 e^{-H_2} within 1e-10.
double qubit_variance_from_entropy(double h, RenyiIndex alpha);

/// Spin-1 collision entropy from the two variances:
/// H_2(J) = -ln[1 - V(J)/2 - 3 V(J^2)/2].
double spin1_collision_entropy_from_variances(double var_j, double var_j2);

/// Moments of a spin-3/2 component entering its collision-entropy display.
struct Spin32Moments {
  double var_j3;   // V(J^3)
  double var_j2;   // V(J^2)
  double var_j;    // V(J)
  double m4;       // <J^4>
  double m1;       // <J>
  double m3;       // <J^3>
};

/// Spin-3/2 collision entropy:
/// H_2(J) = -ln{1 - [(5/9)V(J^3) + (1/4)V(J^2) + (365/144)V(J)
///                   - (41/18)(<J^4> - <J><J^3>)]}.
double spin32_collision_entropy_from_moments(const Spin32Moments& m);

}  // namespace urequiv
