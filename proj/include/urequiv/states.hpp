// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "urequiv/linalg.hpp"
#include "urequiv/rng.hpp"

namespace urequiv {

/// Normalized pure state. Construction rejects vectors whose norm deviates
/// from 1 by more than 1e-12.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  const Complex& operator[](int i) const { return amps_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Complex> amps_;
};

/// Density matrix: Hermitian (1e-12), unit trace (1e-10), smallest
/// eigenvalue >= -1e-10. Purity Tr[rho^2] is computed once at construction.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(ComplexMatrix rho);

  int dim() const { return mat_.dim(); }
  const ComplexMatrix& matrix() const { return mat_; }
  double purity() const { return purity_; }

 private:
  DensityMatrix(ComplexMatrix m, double purity) : mat_(std::move(m)), purity_(purity) {}

  ComplexMatrix mat_;
  double purity_;
};

/// rho = |psi><psi|.
DensityMatrix pure_state(const StateVector& v);

/// Haar-random pure state: 2*dim independent standard gaussians assembled
/// into complex amplitudes and normalized.
StateVector random_pure(int dim, SplitMix64& rng);
StateVector random_pure(int dim, std::uint64_t seed);

/// Hilbert-Schmidt random mixed state: rho = G G^dag / Tr[G G^dag] with G a
/// dim x dim matrix of complex standard gaussians (Ginibre).
DensityMatrix random_mixed(int dim, SplitMix64& rng);
DensityMatrix random_mixed(int dim, std::uint64_t seed);

/// rho = (I + r n.sigma)/2 for unit Bloch axis n and radius r in [0, 1].
DensityMatrix qubit_from_bloch(const std::array<double, 3>& n, double r);

/// Uniform random unit 3-vector (normalized gaussians).
std::array<double, 3> random_axis(SplitMix64& rng);

/// Random Hermitian matrix (G + G^dag)/2, G complex standard gaussian.
ComplexMatrix random_hermitian(int dim, SplitMix64& rng);

double expectation(const DensityMatrix& rho, const ComplexMatrix& m);

}  // namespace urequiv
