// SPDX-License-Identifier: Apache-2.0
#include "urequiv/states.hpp"

#include <cmath>

namespace urequiv {

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) fail(ErrorCode::dimension_mismatch, "empty state vector");
  double norm2 = 0.0;
  for (const Complex& a : amps_) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-12)
    fail(ErrorCode::not_normalized, "state norm^2 = " + std::to_string(norm2));
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix rho) {
  if (!rho.is_hermitian(1e-12))
    fail(ErrorCode::not_hermitian, "density matrix is not Hermitian within 1e-12");
  Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10)
    fail(ErrorCode::argument_out_of_range, "density matrix trace differs from 1");
  HermitianOperator eig = eigen_decompose(rho);
  if (eig.eigenvalues.back() < -1e-10)
    fail(ErrorCode::argument_out_of_range, "density matrix has a negative eigenvalue");
  // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
  double purity = 0.0;
  int n = rho.dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) purity += std::norm(rho(r, c));
  return DensityMatrix(std::move(rho), purity);
}

DensityMatrix pure_state(const StateVector& v) {
  int n = v.dim();
  ComplexMatrix rho(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rho(r, c) = v[r] * std::conj(v[c]);
  return DensityMatrix::from_matrix(std::move(rho));
}

StateVector random_pure(int dim, SplitMix64& rng) {
  if (dim < 2) fail(ErrorCode::dimension_mismatch, "random_pure needs dim >= 2");
  std::vector<Complex> amps(static_cast<std::size_t>(dim));
  double norm2 = 0.0;
  for (Complex& a : amps) {
    a = Complex(rng.next_gaussian(), rng.next_gaussian());
    norm2 += std::norm(a);
  }
  double inv = 1.0 / std::sqrt(norm2);
  for (Complex& a : amps) a *= inv;
  return StateVector(std::move(amps));
}

StateVector random_pure(int dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_pure(dim, rng);
}

DensityMatrix random_mixed(int dim, SplitMix64& rng) {
  if (dim < 2) fail(ErrorCode::dimension_mismatch, "random_mixed needs dim >= 2");
  ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(rng.next_gaussian(), rng.next_gaussian());
  ComplexMatrix w = g * g.adjoint();
  double tr = w.trace().real();
  ComplexMatrix rho = w * Complex(1.0 / tr, 0.0);
  // Enforce exact Hermitian symmetry; GG^dag is Hermitian up to rounding.
  for (int r = 0; r < dim; ++r) {
    rho(r, r) = Complex(rho(r, r).real(), 0.0);
    for (int c = r + 1; c < dim; ++c) {
      Complex v = (rho(r, c) + std::conj(rho(c, r))) * 0.5;
      rho(r, c) = v;
      rho(c, r) = std::conj(v);
    }
  }
  return DensityMatrix::from_matrix(std::move(rho));
}

DensityMatrix random_mixed(int dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_mixed(dim, rng);
}

DensityMatrix qubit_from_bloch(const std::array<double, 3>& n, double r) {
  double len2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
  if (std::abs(len2 - 1.0) > 1e-12 || r < 0.0 || r > 1.0)
    fail(ErrorCode::invalid_bloch, "need |n| = 1 and 0 <= r <= 1");
  ComplexMatrix rho(2);
  rho(0, 0) = 0.5 * (1.0 + r * n[2]);
  rho(1, 1) = 0.5 * (1.0 - r * n[2]);
  rho(0, 1) = 0.5 * r * Complex(n[0], -n[1]);
  rho(1, 0) = std::conj(rho(0, 1));
  return DensityMatrix::from_matrix(std::move(rho));
}

std::array<double, 3> random_axis(SplitMix64& rng) {
  while (true) {
    std::array<double, 3> v{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian()};
    double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (len < 1e-12) continue;
    return {v[0] / len, v[1] / len, v[2] / len};
  }
}

ComplexMatrix random_hermitian(int dim, SplitMix64& rng) {
  ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(rng.next_gaussian(), rng.next_gaussian());
  ComplexMatrix h(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) h(r, c) = (g(r, c) + std::conj(g(c, r))) * 0.5;
  return h;
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& m) {
  return expectation(rho.matrix(), m);
}

}  // namespace urequiv
