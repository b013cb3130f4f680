// SPDX-License-Identifier: Apache-2.0
#include "urequiv/observables.hpp"

#include <cmath>

namespace urequiv {

namespace {

ComplexMatrix maybe_traceless(const ComplexMatrix& m, Traceless t) {
  if (t == Traceless::no) return m;
  ComplexMatrix out = m;
  Complex shift = m.trace() * Complex(1.0 / m.dim(), 0.0);
  for (int i = 0; i < m.dim(); ++i) out(i, i) -= shift;
  return out;
}

}  // namespace

Observable::Observable(const ComplexMatrix& m, Traceless t)
    : op_(eigen_decompose(maybe_traceless(m, t))),
      nondegenerate_(spectrum_nondegenerate(op_.eigenvalues)) {}

Observable::Observable(HermitianOperator op)
    : op_(std::move(op)), nondegenerate_(spectrum_nondegenerate(op_.eigenvalues)) {}

ProbDist::ProbDist(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.empty()) fail(ErrorCode::dimension_mismatch, "empty distribution");
  double sum = 0.0;
  for (double v : p_) {
    if (v < -1e-12) fail(ErrorCode::argument_out_of_range, "negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    fail(ErrorCode::argument_out_of_range, "probabilities sum to " + std::to_string(sum));
}

ProbDist born_probabilities(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != a.dim()) fail(ErrorCode::dimension_mismatch, "born dims");
  int n = a.dim();
  const ComplexMatrix& u = a.op().eigenvectors;
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Complex acc = 0.0;
    for (int r = 0; r < n; ++r) {
      Complex row = 0.0;
      for (int c = 0; c < n; ++c) row += rho.matrix()(r, c) * u(c, j);
      acc += std::conj(u(r, j)) * row;
    }
    p[static_cast<std::size_t>(j)] = acc.real();
  }
  return ProbDist(std::move(p));
}

ProbDist born_probabilities(const StateVector& psi, const Observable& a) {
  if (psi.dim() != a.dim()) fail(ErrorCode::dimension_mismatch, "born dims");
  int n = a.dim();
  const ComplexMatrix& u = a.op().eigenvectors;
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Complex amp = 0.0;
    for (int r = 0; r < n; ++r) amp += std::conj(u(r, j)) * psi[r];
    p[static_cast<std::size_t>(j)] = std::norm(amp);
  }
  return ProbDist(std::move(p));
}

double variance(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != a.dim()) fail(ErrorCode::dimension_mismatch, "variance dims");
  const ComplexMatrix& m = a.matrix();
  double first = expectation(rho, m);
  double second = expectation(rho, m * m);
  return second - first * first;
}

double variance(const StateVector& psi, const Observable& a) {
  if (psi.dim() != a.dim()) fail(ErrorCode::dimension_mismatch, "variance dims");
  int n = a.dim();
  const ComplexMatrix& m = a.matrix();
  std::vector<Complex> w(static_cast<std::size_t>(n), Complex(0.0, 0.0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) w[static_cast<std::size_t>(r)] += m(r, c) * psi[c];
  double first = 0.0, second = 0.0;
  for (int r = 0; r < n; ++r) {
    first += (std::conj(psi[r]) * w[static_cast<std::size_t>(r)]).real();
    second += std::norm(w[static_cast<std::size_t>(r)]);
  }
  return second - first * first;
}

double variance_from_probs(const ProbDist& p, const std::vector<double>& eigenvalues) {
  if (p.size() != static_cast<int>(eigenvalues.size()))
    fail(ErrorCode::dimension_mismatch, "variance_from_probs dims");
  double v = 0.0;
  for (int j = 0; j < p.size(); ++j)
    for (int k = 0; k < p.size(); ++k) {
      double gap = eigenvalues[static_cast<std::size_t>(j)] - eigenvalues[static_cast<std::size_t>(k)];
      v += p[j] * p[k] * gap * gap;
    }
  return 0.5 * v;
}

double covariance(const DensityMatrix& rho, const ComplexMatrix& f, const ComplexMatrix& g) {
  if (rho.dim() != f.dim() || f.dim() != g.dim())
    fail(ErrorCode::dimension_mismatch, "covariance dims");
  ComplexMatrix fg = f * g;
  ComplexMatrix gf = g * f;
  if ((fg - gf).max_abs() > 1e-10)
    fail(ErrorCode::non_commuting, "covariance requires commuting operators");
  ComplexMatrix sym = (fg + gf) * Complex(0.5, 0.0);
  return expectation(rho, sym) - expectation(rho, f) * expectation(rho, g);
}

ComplexMatrix lagrange_basis(const Observable& a, int j) {
  if (!a.nondegenerate())
    fail(ErrorCode::degenerate_spectrum, "Lagrange basis needs distinct eigenvalues");
  if (j < 0 || j >= a.dim()) fail(ErrorCode::dimension_mismatch, "eigenvalue index");
  std::vector<double> indicator(static_cast<std::size_t>(a.dim()), 0.0);
  indicator[static_cast<std::size_t>(j)] = 1.0;
  return apply_spectral(a.op(), indicator);
}

double overlap_bound(const Observable& a, const Observable& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::dimension_mismatch, "overlap dims");
  int n = a.dim();
  const ComplexMatrix& ua = a.op().eigenvectors;
  const ComplexMatrix& ub = b.op().eigenvectors;
  double best = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Complex ov = 0.0;
      for (int r = 0; r < n; ++r) ov += std::conj(ua(r, j)) * ub(r, k);
      best = std::max(best, std::abs(ov));
    }
  return best;
}

Observable spin_operator(int twice_j, const std::array<double, 3>& axis) {
  if (twice_j < 1) fail(ErrorCode::argument_out_of_range, "twice_j must be >= 1");
  double len2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
  if (std::abs(len2 - 1.0) > 1e-12) fail(ErrorCode::invalid_axis, "axis must be unit length");

  double j = 0.5 * twice_j;
  int dim = twice_j + 1;
  ComplexMatrix jz(dim), jp(dim);
  for (int k = 0; k < dim; ++k) {
    double m = j - k;
    jz(k, k) = m;
    if (k > 0) {
      // J_+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>, basis ordered m = j..-j.
      jp(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
  }
  ComplexMatrix jm = jp.adjoint();
  ComplexMatrix jx = (jp + jm) * Complex(0.5, 0.0);
  ComplexMatrix jy = (jp - jm) * Complex(0.0, -0.5);
  ComplexMatrix m = jx * Complex(axis[0], 0.0) + jy * Complex(axis[1], 0.0) +
                    jz * Complex(axis[2], 0.0);
  return Observable(m);
}

Observable pauli_observable(const std::array<double, 3>& axis) {
  double len2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
  if (std::abs(len2 - 1.0) > 1e-12) fail(ErrorCode::invalid_axis, "axis must be unit length");
  ComplexMatrix m(2);
  m(0, 0) = axis[2];
  m(1, 1) = -axis[2];
  m(0, 1) = Complex(axis[0], -axis[1]);
  m(1, 0) = Complex(axis[0], axis[1]);
  return Observable(m);
}

}  // namespace urequiv
