// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "urequiv/linalg.hpp"
#include "urequiv/states.hpp"

namespace urequiv {

enum class Traceless { no, yes };

/// A physical observable: Hermitian matrix with cached spectral
/// decomposition. `Traceless::yes` subtracts (Tr/N) I before decomposing;
/// variances and entropies are shift-invariant, so this is an explicit
/// convenience, never applied silently.
class Observable {
 public:
  explicit Observable(const ComplexMatrix& m, Traceless t = Traceless::no);
  explicit Observable(HermitianOperator op);

  const HermitianOperator& op() const { return op_; }
  int dim() const { return op_.dim(); }
  const std::vector<double>& eigenvalues() const { return op_.eigenvalues; }
  const ComplexMatrix& matrix() const { return op_.matrix; }
  bool nondegenerate() const { return nondegenerate_; }

 private:
  HermitianOperator op_;
  bool nondegenerate_;
};

/// Born probabilities p_j = <j|rho|j>. Entries may carry rounding noise down
/// to -1e-12; reads clamp at zero. The sum must be 1 within 1e-9.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> probs);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int j) const {
    double v = p_[static_cast<std::size_t>(j)];
    return v < 0.0 ? 0.0 : v;
  }
  const std::vector<double>& raw() const { return p_; }

 private:
  std::vector<double> p_;
};

ProbDist born_probabilities(const DensityMatrix& rho, const Observable& a);
/// Pure-state fast path: p_j = |<j|psi>|^2.
ProbDist born_probabilities(const StateVector& psi, const Observable& a);

/// V(A) = Tr[rho A^2] - Tr[rho A]^2.
double variance(const DensityMatrix& rho, const Observable& a);
/// Pure-state fast path: <psi|A^2|psi> - <psi|A|psi>^2 via w = A psi.
double variance(const StateVector& psi, const Observable& a);

/// The pairwise route to the same number:
/// V = (1/2) sum_{j,k} p_j p_k (lambda_j - lambda_k)^2.
double variance_from_probs(const ProbDist& p, const std::vector<double>& eigenvalues);

/// Symmetrized covariance Re Tr[rho (fg+gf)/2] - Tr[rho f] Tr[rho g] for
/// commuting Hermitian f, g (checked: ||fg - gf||_max < 1e-10).
double covariance(const DensityMatrix& rho, const ComplexMatrix& f, const ComplexMatrix& g);

/// Lagrange basis polynomial of the spectrum evaluated on the operator:
/// ell_j(A) = |j><j|, computed spectrally (indicator on lambda_j) rather
/// than by multiplying monomial factors. Requires a nondegenerate spectrum.
/// j is a 0-based eigenvalue index.
ComplexMatrix lagrange_basis(const Observable& a, int j);

/// c_ab = max_{j,k} |<a_j|b_k>|, in [1/sqrt(N), 1].
double overlap_bound(const Observable& a, const Observable& b);

/// Angular momentum component J.n for spin j = twice_j/2 (hbar = 1), built
/// from the standard (2j+1)-dimensional J_x, J_y, J_z in the |j,m> basis
/// ordered m = j..-j. Eigenvalues are {j, j-1, ..., -j}.
Observable spin_operator(int twice_j, const std::array<double, 3>& axis);

/// sigma.n for a unit axis; eigenvalues +-1.
Observable pauli_observable(const std::array<double, 3>& axis);

}  // namespace urequiv
