// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "urequiv/error.hpp"

namespace urequiv {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major, for small dimensions (N <= ~8).
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Complex& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;     // entrywise max |a_ij|
  double frobenius() const;
  bool is_hermitian(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  int dim_;
  std::vector<Complex> a_;
};

/// A Hermitian matrix together with its spectral decomposition.
/// Eigenvalues are sorted descending; eigenvectors are the matching columns,
/// each rotated so its largest-magnitude entry is real and positive.
struct HermitianOperator {
  ComplexMatrix matrix;
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  int dim() const { return matrix.dim(); }
};

/// Cyclic Jacobi eigensolver for complex Hermitian matrices.
/// Converged when the off-diagonal Frobenius norm drops below
/// 1e-14 * ||m||_F; at most 100 sweeps. Deterministic for identical input.
HermitianOperator eigen_decompose(const ComplexMatrix& m);

/// Re(Tr[rho m]) for Hermitian m. The trace of a product of two Hermitian
/// matrices is real; an imaginary part above 1e-10 is rejected.
double expectation(const ComplexMatrix& rho, const ComplexMatrix& m);

/// Re(Tr[a b]) without forming the product.
double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// C = (AB - BA) / (2i). Hermitian whenever A and B are.
ComplexMatrix commutator_half_i(const ComplexMatrix& a, const ComplexMatrix& b);

/// f(A) = sum_j f(lambda_j) |j><j| for per-eigenvalue values f(lambda_j).
ComplexMatrix apply_spectral(const HermitianOperator& op, std::span<const double> values);

/// sum_k coeffs[k] * A^k, evaluated spectrally (Horner on each eigenvalue).
ComplexMatrix apply_polynomial(const HermitianOperator& op, std::span<const double> coeffs);

/// Distinctness test used everywhere a nondegenerate spectrum is required:
/// lambda_i and lambda_j collide when
/// |lambda_i - lambda_j| < 1e-9 * max(1, |lambda_i|, |lambda_j|).
bool spectrum_nondegenerate(const std::vector<double>& eigenvalues);

}  // namespace urequiv
