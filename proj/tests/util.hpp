// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "urequiv/observables.hpp"

namespace test_util {

using urequiv::Complex;
using urequiv::ComplexMatrix;

inline ComplexMatrix sigma_x() {
  return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}
inline ComplexMatrix sigma_y() {
  return ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
}
inline ComplexMatrix sigma_z() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

inline double max_prob_diff(const urequiv::ProbDist& a, const urequiv::ProbDist& b) {
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// The variance/covariance data fixes the order of a two-outcome distribution
// only by convention, so dimension-2 comparisons sort first.
inline double max_prob_diff_sorted(const urequiv::ProbDist& a, const urequiv::ProbDist& b) {
  std::vector<double> va, vb;
  for (int i = 0; i < a.size(); ++i) {
    va.push_back(a[i]);
    vb.push_back(b[i]);
  }
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) worst = std::max(worst, std::abs(va[i] - vb[i]));
  return worst;
}

}  // namespace test_util
