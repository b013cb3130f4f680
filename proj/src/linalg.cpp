// SPDX-License-Identifier: Apache-2.0
#include "urequiv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace urequiv {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim < 1) fail(ErrorCode::dimension_mismatch, "matrix dimension must be >= 1");
  a_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  int n = static_cast<int>(rows.size());
  ComplexMatrix m(n);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::dimension_mismatch, "non-square initializer");
    int c = 0;
    for (Complex v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius() const {
  double s = 0.0;
  for (const Complex& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) fail(ErrorCode::dimension_mismatch, "matrix add");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) fail(ErrorCode::dimension_mismatch, "matrix sub");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) fail(ErrorCode::dimension_mismatch, "matrix multiply");
  int n = a.dim_;
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      Complex arb = a(r, k);
      if (arb == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < n; ++c) out(r, c) += arb * b(k, c);
    }
  return out;
}

namespace {

double offdiag_frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  int n = m.dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The 2x2 unitary is
//   [  c        -s e^{i phi} ]
//   [  s e^{-i phi}   c      ]
// with e^{i phi} the phase of a(p,q) and tan(theta) the stable small root of
// t^2 + 2 tau t - 1 = 0, tau = (a_pp - a_qq) / (2 |a_pq|).
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& u, int p, int q) {
  Complex apq = a(p, q);
  double r = std::abs(apq);
  if (r == 0.0) return;
  Complex phase = apq / r;
  double app = a(p, p).real();
  double aqq = a(q, q).real();
  double tau = (app - aqq) / (2.0 * r);
  double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  double c = 1.0 / std::sqrt(1.0 + t * t);
  double s = t * c;

  int n = a.dim();
  a(p, p) = app * c * c + 2.0 * r * c * s + aqq * s * s;
  a(q, q) = app * s * s - 2.0 * r * c * s + aqq * c * c;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    Complex akp = a(k, p);
    Complex akq = a(k, q);
    a(k, p) = c * akp + s * std::conj(phase) * akq;
    a(k, q) = -s * phase * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  for (int k = 0; k < n; ++k) {
    Complex ukp = u(k, p);
    Complex ukq = u(k, q);
    u(k, p) = c * ukp + s * std::conj(phase) * ukq;
    u(k, q) = -s * phase * ukp + c * ukq;
  }
}

// Rotate each column so its largest-magnitude entry is real and positive;
// fixes the overall phase so that overlaps are reproducible across runs.
void fix_column_phases(ComplexMatrix& u) {
  int n = u.dim();
  for (int j = 0; j < n; ++j) {
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      double m = std::abs(u(i, j));
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    if (best <= 0.0) continue;
    Complex rot = std::conj(u(imax, j)) / best;
    for (int i = 0; i < n; ++i) u(i, j) *= rot;
    u(imax, j) = Complex(u(imax, j).real(), 0.0);
  }
}

}  // namespace

HermitianOperator eigen_decompose(const ComplexMatrix& m) {
  if (!m.is_hermitian(1e-12))
    fail(ErrorCode::not_hermitian, "matrix is not Hermitian within 1e-12");
  int n = m.dim();

  // Symmetrize exactly so rounding in the input cannot drift the iteration.
  ComplexMatrix a(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = (m(r, c) + std::conj(m(c, r))) * 0.5;
  ComplexMatrix u = ComplexMatrix::identity(n);

  double target = 1e-14 * a.frobenius();
  const int max_sweeps = 100;
  bool converged = offdiag_frobenius(a) <= target;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, u, p, q);
    converged = offdiag_frobenius(a) <= target;
  }
  if (!converged)
    fail(ErrorCode::no_convergence, "Jacobi sweep limit exceeded");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  HermitianOperator out{m, std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n)};
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[static_cast<std::size_t>(j)] = a(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = u(i, order[static_cast<std::size_t>(j)]);
  }
  fix_column_phases(out.eigenvectors);

  // Post checks on the advertised invariants.
  ComplexMatrix gram = out.eigenvectors.adjoint() * out.eigenvectors;
  ComplexMatrix recon(n);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        recon(r, c) += out.eigenvalues[static_cast<std::size_t>(j)] * out.eigenvectors(r, j) *
                       std::conj(out.eigenvectors(c, j));
  double unitary_err = (gram - ComplexMatrix::identity(n)).max_abs();
  double recon_err = (recon - m).max_abs();
  double scale = std::max(1.0, m.max_abs());
  if (unitary_err > 1e-10 || recon_err > 1e-10 * scale)
    fail(ErrorCode::no_convergence, "eigendecomposition failed its residual checks");
  return out;
}

double expectation(const ComplexMatrix& rho, const ComplexMatrix& m) {
  if (rho.dim() != m.dim()) fail(ErrorCode::dimension_mismatch, "expectation dims");
  Complex t = 0.0;
  int n = rho.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t += rho(i, j) * m(j, i);
  if (std::abs(t.imag()) > 1e-10)
    fail(ErrorCode::non_real_expectation, "Tr[rho m] has imaginary part " +
                                              std::to_string(t.imag()));
  return t.real();
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::dimension_mismatch, "trace product dims");
  double t = 0.0;
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t += a(i, j).real() * b(j, i).real() - a(i, j).imag() * b(j, i).imag();
  return t;
}

ComplexMatrix commutator_half_i(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::dimension_mismatch, "commutator dims");
  return (a * b - b * a) * Complex(0.0, -0.5);
}

ComplexMatrix apply_spectral(const HermitianOperator& op, std::span<const double> values) {
  int n = op.dim();
  if (static_cast<int>(values.size()) != n)
    fail(ErrorCode::dimension_mismatch, "one value per eigenvalue required");
  ComplexMatrix out(n);
  for (int j = 0; j < n; ++j) {
    double f = values[static_cast<std::size_t>(j)];
    if (f == 0.0) continue;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out(r, c) += f * op.eigenvectors(r, j) * std::conj(op.eigenvectors(c, j));
  }
  return out;
}

ComplexMatrix apply_polynomial(const HermitianOperator& op, std::span<const double> coeffs) {
  if (coeffs.empty()) fail(ErrorCode::argument_out_of_range, "empty coefficient list");
  int n = op.dim();
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double x = op.eigenvalues[static_cast<std::size_t>(j)];
    double f = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) f = f * x + coeffs[k];
    values[static_cast<std::size_t>(j)] = f;
  }
  return apply_spectral(op, values);
}

bool spectrum_nondegenerate(const std::vector<double>& eigenvalues) {
  // Sorted input: adjacent pairs suffice.
  for (std::size_t i = 0; i + 1 < eigenvalues.size(); ++i) {
    double a = eigenvalues[i];
    double b = eigenvalues[i + 1];
    double thresh = 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a - b) < thresh) return false;
  }
  return true;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::non_real_expectation: return "NonRealExpectation";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::invalid_bloch: return "InvalidBloch";
    case ErrorCode::non_commuting: return "NonCommuting";
    case ErrorCode::degenerate_spectrum: return "DegenerateSpectrum";
    case ErrorCode::rank_deficient: return "RankDeficient";
    case ErrorCode::inconsistent_variances: return "InconsistentVariances";
    case ErrorCode::numerically_degenerate: return "NumericallyDegenerate";
    case ErrorCode::vanishing_denominator: return "VanishingDenominator";
    case ErrorCode::argument_out_of_range: return "ArgumentOutOfRange";
    case ErrorCode::variance_out_of_range: return "VarianceOutOfRange";
    case ErrorCode::entropy_out_of_range: return "EntropyOutOfRange";
    case ErrorCode::not_qubit: return "NotQubit";
    case ErrorCode::not_spin_one: return "NotSpinOne";
    case ErrorCode::invalid_axis: return "InvalidAxis";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::infeasible_target: return "InfeasibleTarget";
    case ErrorCode::unknown_relation: return "UnknownRelation";
    case ErrorCode::degenerate_objective: return "DegenerateObjective";
    case ErrorCode::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace urequiv
