// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "urequiv/observables.hpp"

namespace urequiv {

/// Lexicographic index of the pair (j, k), j < k, among the L = N(N-1)/2
/// unordered pairs of {0..N-1}.
int pair_index(int j, int k, int n);

/// A commutative operator set sharing the eigenbasis of `base`:
/// the base observable itself plus one difference projector
/// D_jk = |j><j| - |k><k| per pair, M = L + 1 members in total.
/// Row i of `spectra` holds the member's eigenvalues in the shared basis;
/// g(i, l) = (lambda^(i)_j - lambda^(i)_k)^2 is the M x L coefficient
/// matrix of the linear system variance_i = sum_l g(i,l) x_l.
struct CommutativeSet {
  Observable base;
  std::vector<std::vector<double>> spectra;  // M rows of length N
  std::vector<std::vector<double>> g;        // M rows of length L
  double min_singular = 0.0;                 // of g
  double max_singular = 0.0;

  int dim() const { return base.dim(); }
  int members() const { return static_cast<int>(spectra.size()); }
  int pairs() const { return static_cast<int>(g.empty() ? 0 : g.front().size()); }
};

CommutativeSet build_commutative_set(const Observable& a);

/// Variances of every member of the set in the given state; the input
/// vector for variances_to_pair_products.
std::vector<double> member_variances(const CommutativeSet& cs, const DensityMatrix& rho);

/// The pair products x_l = p_j p_k, each in [0, 1/4] (reads clamp;
/// construction tolerates rounding down to -1e-8).
class PairProducts {
 public:
  PairProducts(std::vector<double> x, int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(x_.size()); }
  /// Clamped to [0, 1/4].
  double value(int l) const;
  double value(int j, int k) const { return value(pair_index(j, k, dim_)); }
  const std::vector<double>& raw() const { return x_; }

 private:
  std::vector<double> x_;
  int dim_;
};

/// Least-squares solve of g x = dvec (normal equations; g has full column
/// rank by construction). Residual above 1e-6 means the variance vector is
/// not realizable by any state.
PairProducts variances_to_pair_products(const CommutativeSet& cs, std::span<const double> dvec);

struct ReconstructedDist {
  ProbDist probs;
  /// All pair products vanish: the state is an eigenstate but the variance
  /// data cannot identify which eigenvalue it occupies. The returned
  /// distribution puts the whole weight on index 0 by convention.
  bool ambiguous = false;
  /// Closed-form denominators vanished and a fallback path produced the
  /// result.
  bool used_fallback = false;
};

/// Recover p from the pair products: pivot on the row with the largest
/// partner sum, p_m = sqrt(x_mj x_mk / x_jk) over the best-conditioned
/// partner pair, then p_i = x_im / p_m. N = 2 solves the quadratic
/// p(1-p) = x directly and reports the larger root first.
ReconstructedDist pair_products_to_probs(const PairProducts& x, int n);

/// Probabilities from covariances of Lagrange basis polynomials:
/// p_i^2 = Om_ij Om_ik / Om_jk with Om_ij = -cov(ell_i, ell_j), choosing
/// the admissible pair (j,k) with the largest |Om_jk|. Indices whose Om row
/// vanishes get the complement 1 - sum(others). N = 2 uses the quadratic
/// route on Om_01 alone (larger root first).
ProbDist probs_from_covariances(const DensityMatrix& rho, const Observable& a);

/// Spin-1 closed forms for p_i^2 in terms of <J>, <J^2>, <J^3> moments.
/// Denominators are guarded at 1e-12; on a vanishing denominator the
/// covariance route is tried, and if its data also vanishes (eigenstate)
/// the Born probabilities are returned with used_fallback set.
ReconstructedDist spin1_probs_from_moments(const DensityMatrix& rho, const Observable& a);

}  // namespace urequiv
