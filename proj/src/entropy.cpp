// SPDX-License-Identifier: Apache-2.0
#include "urequiv/entropy.hpp"

#include <cmath>

namespace urequiv {

namespace {

double entropy_of_pair(double ap, double am, RenyiIndex alpha) {
  if (alpha.shannon()) {
    double h = 0.0;
    if (ap > 0.0) h -= ap * std::log(ap);
    if (am > 0.0) h -= am * std::log(am);
    return h;
  }
  double s = std::pow(ap, alpha.value) + std::pow(am, alpha.value);
  return std::log(s) / (1.0 - alpha.value);
}

}  // namespace

double renyi_entropy(const ProbDist& p, RenyiIndex alpha) {
  // Renormalize the clamped entries so H never exceeds ln N by more than
  // rounding even when the input sum carries its allowed 1e-9 slack.
  double sum = 0.0;
  for (int j = 0; j < p.size(); ++j) sum += p[j];
  double h;
  if (alpha.shannon()) {
    h = 0.0;
    for (int j = 0; j < p.size(); ++j) {
      double q = p[j] / sum;
      if (q > 0.0) h -= q * std::log(q);
    }
  } else {
    double s = 0.0;
    for (int j = 0; j < p.size(); ++j) {
      double q = p[j] / sum;
      if (q > 0.0) s += std::pow(q, alpha.value);
    }
    h = std::log(s) / (1.0 - alpha.value);
  }
  return h < 0.0 ? 0.0 : h;
}

double qubit_entropy_from_variance(double v, RenyiIndex alpha) {
  if (v < -1e-12 || v > 1.0 + 1e-12)
    fail(ErrorCode::variance_out_of_range, "normalized variance must lie in [0, 1]");
  v = std::min(std::max(v, 0.0), 1.0);
  double s = std::sqrt(1.0 - v);
  double ap = 0.5 * (1.0 + s);
  double am = v == 0.0 ? 0.0 : v / (4.0 * ap);  // (1-s)/2 without cancellation
  return entropy_of_pair(ap, am, alpha);
}

double qubit_variance_from_entropy(double h, RenyiIndex alpha) {
  const double ln2 = std::log(2.0);
  if (h < -1e-12 || h > ln2 + 1e-9)
    fail(ErrorCode::entropy_out_of_range, "qubit entropy must lie in [0, ln 2]");
  h = std::min(std::max(h, 0.0), ln2);
  if (h == 0.0) return 0.0;
  if (h == ln2) return 1.0;
  double lo = 0.0, hi = 1.0;
  double mid = 0.5;
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    double fm = qubit_entropy_from_variance(mid, alpha);
    if (std::abs(fm - h) < 1e-13) return mid;
    if (fm < h)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-18) break;
  }
  return mid;
}

double spin1_collision_entropy_from_variances(double var_j, double var_j2) {
  double arg = 1.0 - 0.5 * var_j - 1.5 * var_j2;
  if (arg <= 0.0 || arg > 1.0 + 1e-12)
    fail(ErrorCode::argument_out_of_range,
         "1 - V(J)/2 - 3V(J^2)/2 = " + std::to_string(arg) + " outside (0, 1]");
  return -std::log(std::min(arg, 1.0));
}

double spin32_collision_entropy_from_moments(const Spin32Moments& m) {
  double bracket = (5.0 / 9.0) * m.var_j3 + 0.25 * m.var_j2 +
                   (365.0 / 144.0) * m.var_j - (41.0 / 18.0) * (m.m4 - m.m1 * m.m3);
  double arg = 1.0 - bracket;
  if (arg <= 0.0 || arg > 1.0 + 1e-12)
    fail(ErrorCode::argument_out_of_range,
         "collision argument " + std::to_string(arg) + " outside (0, 1]");
  return -std::log(std::min(arg, 1.0));
}

}  // namespace urequiv
