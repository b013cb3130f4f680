// SPDX-License-Identifier: Apache-2.0
#include "urequiv/reconstruction.hpp"

#include <algorithm>
#include <cmath>

namespace urequiv {

namespace {

constexpr double kZeroThreshold = 1e-10;   // a pair product this small counts as zero
constexpr double kDenomThreshold = 1e-12;  // smallest usable denominator

// Gaussian elimination with partial pivoting; a is overwritten.
std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
  int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
          std::abs(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
        piv = r;
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
    std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(piv)]);
    double d = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    if (d == 0.0) fail(ErrorCode::rank_deficient, "singular normal matrix");
    for (int r = col + 1; r < n; ++r) {
      double f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / d;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
    }
  }
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    double acc = b[static_cast<std::size_t>(r)];
    for (int c = r + 1; c < n; ++c)
      acc -= a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(r)] = acc / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
  }
  return x;
}

// Singular values of a real M x L matrix via the eigenvalues of G^T G,
// reusing the complex Jacobi solver (L <= 10 at the target dimensions).
std::pair<double, double> singular_extremes(const std::vector<std::vector<double>>& g) {
  int rows = static_cast<int>(g.size());
  int cols = static_cast<int>(g.front().size());
  ComplexMatrix gtg(cols);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) {
      double acc = 0.0;
      for (int r = 0; r < rows; ++r)
        acc += g[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] *
               g[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      gtg(i, j) = acc;
    }
  HermitianOperator eig = eigen_decompose(gtg);
  double largest = std::sqrt(std::max(0.0, eig.eigenvalues.front()));
  double smallest = std::sqrt(std::max(0.0, eig.eigenvalues.back()));
  return {smallest, largest};
}

}  // namespace

int pair_index(int j, int k, int n) {
  if (j < 0 || k <= j || k >= n) fail(ErrorCode::dimension_mismatch, "bad pair index");
  // Lexicographic over (j, k), j < k.
  return j * n - j * (j + 1) / 2 + (k - j - 1);
}

CommutativeSet build_commutative_set(const Observable& a) {
  int n = a.dim();
  if (n < 2) fail(ErrorCode::dimension_mismatch, "need dim >= 2");
  int pair_total = n * (n - 1) / 2;

  std::vector<std::vector<double>> spectra;
  spectra.push_back(a.eigenvalues());
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      std::vector<double> s(static_cast<std::size_t>(n), 0.0);
      s[static_cast<std::size_t>(j)] = 1.0;
      s[static_cast<std::size_t>(k)] = -1.0;
      spectra.push_back(std::move(s));
    }

  std::vector<std::vector<double>> g;
  g.reserve(spectra.size());
  for (const auto& s : spectra) {
    std::vector<double> row(static_cast<std::size_t>(pair_total));
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        double gap = s[static_cast<std::size_t>(j)] - s[static_cast<std::size_t>(k)];
        row[static_cast<std::size_t>(pair_index(j, k, n))] = gap * gap;
      }
    g.push_back(std::move(row));
  }

  auto [smin, smax] = singular_extremes(g);
  if (smin <= 1e-10 * smax)
    fail(ErrorCode::rank_deficient, "coefficient matrix lost column rank");
  return CommutativeSet{a, std::move(spectra), std::move(g), smin, smax};
}

std::vector<double> member_variances(const CommutativeSet& cs, const DensityMatrix& rho) {
  if (rho.dim() != cs.dim()) fail(ErrorCode::dimension_mismatch, "member_variances dims");
  std::vector<double> out;
  out.reserve(cs.spectra.size());
  for (const auto& s : cs.spectra) {
    ComplexMatrix op = apply_spectral(cs.base.op(), s);
    double first = expectation(rho, op);
    double second = expectation(rho, op * op);
    out.push_back(second - first * first);
  }
  return out;
}

PairProducts::PairProducts(std::vector<double> x, int dim) : x_(std::move(x)), dim_(dim) {
  if (static_cast<int>(x_.size()) != dim * (dim - 1) / 2)
    fail(ErrorCode::dimension_mismatch, "pair product count must be N(N-1)/2");
  for (double v : x_)
    if (v < -1e-8 || v > 0.25 + 1e-8)
      fail(ErrorCode::argument_out_of_range, "pair product outside [0, 1/4]");
}

double PairProducts::value(int l) const {
  double v = x_[static_cast<std::size_t>(l)];
  return std::min(std::max(v, 0.0), 0.25);
}

PairProducts variances_to_pair_products(const CommutativeSet& cs, std::span<const double> dvec) {
  int rows = cs.members();
  int cols = cs.pairs();
  if (static_cast<int>(dvec.size()) != rows)
    fail(ErrorCode::dimension_mismatch, "one variance per set member required");
  for (double d : dvec)
    if (d < -1e-10)
      fail(ErrorCode::inconsistent_variances, "negative variance supplied");

  // Normal equations G^T G x = G^T d.
  std::vector<std::vector<double>> gtg(static_cast<std::size_t>(cols),
                                       std::vector<double>(static_cast<std::size_t>(cols), 0.0));
  std::vector<double> gtd(static_cast<std::size_t>(cols), 0.0);
  for (int r = 0; r < rows; ++r) {
    const auto& row = cs.g[static_cast<std::size_t>(r)];
    for (int i = 0; i < cols; ++i) {
      gtd[static_cast<std::size_t>(i)] += row[static_cast<std::size_t>(i)] * dvec[static_cast<std::size_t>(r)];
      for (int j = 0; j < cols; ++j)
        gtg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            row[static_cast<std::size_t>(i)] * row[static_cast<std::size_t>(j)];
    }
  }
  std::vector<double> x = solve_linear(std::move(gtg), std::move(gtd));

  double residual = 0.0;
  for (int r = 0; r < rows; ++r) {
    double acc = 0.0;
    for (int i = 0; i < cols; ++i)
      acc += cs.g[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    residual = std::max(residual, std::abs(acc - dvec[static_cast<std::size_t>(r)]));
  }
  if (residual > 1e-6)
    fail(ErrorCode::inconsistent_variances,
         "variance vector not realizable: residual " + std::to_string(residual));
  for (double& v : x) v = std::min(std::max(v, -1e-8), 0.25 + 1e-8);
  return PairProducts(std::move(x), cs.dim());
}

ReconstructedDist pair_products_to_probs(const PairProducts& x, int n) {
  if (x.dim() != n) fail(ErrorCode::dimension_mismatch, "pair products dim");
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);

  double largest = 0.0;
  for (int l = 0; l < x.size(); ++l) largest = std::max(largest, x.value(l));
  if (largest < kZeroThreshold) {
    // Dispersion-free data: the state occupies a single eigenvector but the
    // variances cannot say which; report index 0 and flag it.
    p[0] = 1.0;
    return ReconstructedDist{ProbDist(std::move(p)), n > 1, false};
  }

  if (n == 2) {
    double s = std::sqrt(std::max(0.0, 1.0 - 4.0 * x.value(0)));
    p[0] = 0.5 * (1.0 + s);
    p[1] = 1.0 - p[0];
    return ReconstructedDist{ProbDist(std::move(p)), false, false};
  }

  // Pivot on the row with the largest partner sum.
  int pivot = 0;
  double best_sum = -1.0;
  for (int m = 0; m < n; ++m) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k)
      if (k != m) sum += x.value(std::min(m, k), std::max(m, k));
    if (sum > best_sum) {
      best_sum = sum;
      pivot = m;
    }
  }

  std::vector<int> partners;
  for (int k = 0; k < n; ++k)
    if (k != pivot) partners.push_back(k);
  std::stable_sort(partners.begin(), partners.end(), [&](int a, int b) {
    return x.value(std::min(pivot, a), std::max(pivot, a)) >
           x.value(std::min(pivot, b), std::max(pivot, b));
  });

  // The two largest partners give the best-conditioned triple; if their own
  // product vanishes, take the partner pair with the largest denominator.
  int pj = partners[0], pk = partners[1];
  if (x.value(std::min(pj, pk), std::max(pj, pk)) < kDenomThreshold) {
    double best_den = -1.0;
    for (std::size_t a = 0; a < partners.size(); ++a)
      for (std::size_t b = a + 1; b < partners.size(); ++b) {
        int ja = partners[a], kb = partners[b];
        double den = x.value(std::min(ja, kb), std::max(ja, kb));
        if (den > best_den) {
          best_den = den;
          pj = ja;
          pk = kb;
        }
      }
    if (best_den < kDenomThreshold)
      fail(ErrorCode::numerically_degenerate,
           "no usable partner pair: all candidate denominators below 1e-12");
  }

  double xmj = x.value(std::min(pivot, pj), std::max(pivot, pj));
  double xmk = x.value(std::min(pivot, pk), std::max(pivot, pk));
  double xjk = x.value(std::min(pj, pk), std::max(pj, pk));
  double pm = std::sqrt(std::max(0.0, xmj * xmk / xjk));
  p[static_cast<std::size_t>(pivot)] = pm;
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    p[static_cast<std::size_t>(i)] = x.value(std::min(pivot, i), std::max(pivot, i)) / pm;
  }
  double sum = 0.0;
  for (double& v : p) {
    v = std::max(v, 0.0);
    sum += v;
  }
  for (double& v : p) v /= sum;
  return ReconstructedDist{ProbDist(std::move(p)), false, false};
}

ProbDist probs_from_covariances(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != a.dim()) fail(ErrorCode::dimension_mismatch, "covariance path dims");
  if (!a.nondegenerate())
    fail(ErrorCode::degenerate_spectrum, "covariance path needs distinct eigenvalues");
  int n = a.dim();

  std::vector<ComplexMatrix> ell;
  ell.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ell.push_back(lagrange_basis(a, i));

  std::vector<std::vector<double>> om(static_cast<std::size_t>(n),
                                      std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = -covariance(rho, ell[static_cast<std::size_t>(i)], ell[static_cast<std::size_t>(j)]);
      om[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      om[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }

  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  if (n == 2) {
    double x = std::min(std::max(om[0][1], 0.0), 0.25);
    p[0] = 0.5 * (1.0 + std::sqrt(1.0 - 4.0 * x));
    p[1] = 1.0 - p[0];
    return ProbDist(std::move(p));
  }

  std::vector<bool> deferred(static_cast<std::size_t>(n), false);
  int deferred_count = 0;
  for (int i = 0; i < n; ++i) {
    double row_max = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) row_max = std::max(row_max, std::abs(om[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    if (row_max < kZeroThreshold) {
      deferred[static_cast<std::size_t>(i)] = true;
      ++deferred_count;
    }
  }
  if (deferred_count == n) {
    // Eigenstate corner: every covariance vanishes; weight goes to index 0.
    p[0] = 1.0;
    return ProbDist(std::move(p));
  }

  for (int i = 0; i < n; ++i) {
    if (deferred[static_cast<std::size_t>(i)]) continue;
    int bj = -1, bk = -1;
    double best = -1.0;
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (j == i || k == i) continue;
        double den = std::abs(om[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
        if (den > best) {
          best = den;
          bj = j;
          bk = k;
        }
      }
    if (best < kDenomThreshold)
      fail(ErrorCode::vanishing_denominator,
           "no pair (j,k) with |Omega_jk| >= 1e-12 while row " + std::to_string(i) +
               " is nonzero");
    double val = om[static_cast<std::size_t>(i)][static_cast<std::size_t>(bj)] *
                 om[static_cast<std::size_t>(i)][static_cast<std::size_t>(bk)] /
                 om[static_cast<std::size_t>(bj)][static_cast<std::size_t>(bk)];
    p[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, val));
  }

  if (deferred_count == 1) {
    double others = 0.0;
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      if (deferred[static_cast<std::size_t>(i)])
        idx = i;
      else
        others += p[static_cast<std::size_t>(i)];
    }
    p[static_cast<std::size_t>(idx)] = std::max(0.0, 1.0 - others);
  }
  double sum = 0.0;
  for (double v : p) sum += v;
  for (double& v : p) v /= sum;
  return ProbDist(std::move(p));
}

ReconstructedDist spin1_probs_from_moments(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != 3 || a.dim() != 3)
    fail(ErrorCode::not_spin_one, "spin-1 closed forms need dimension 3");
  const auto& eigs = a.eigenvalues();
  if (std::abs(eigs[0] - 1.0) > 1e-9 || std::abs(eigs[1]) > 1e-9 || std::abs(eigs[2] + 1.0) > 1e-9)
    fail(ErrorCode::not_spin_one, "spectrum must be {1, 0, -1}");

  const ComplexMatrix& jm = a.matrix();
  ComplexMatrix j2 = jm * jm;
  double m1 = expectation(rho, jm);
  double m2 = expectation(rho, j2);
  double m3 = expectation(rho, j2 * jm);
  double var_j = m2 - m1 * m1;
  double var_j2 = expectation(rho, j2 * j2) - m2 * m2;
  double d = m3 - m2 * m1;

  double den1 = 4.0 * (var_j2 - d);
  double den2 = var_j - var_j2;
  double den3 = 4.0 * (var_j2 + d);
  if (std::abs(den1) < kDenomThreshold || std::abs(den2) < kDenomThreshold ||
      std::abs(den3) < kDenomThreshold) {
    // A closed-form denominator vanished; try the covariance route, and on
    // a fully dispersion-free state fall back to the Born rule itself.
    bool all_zero = var_j < kZeroThreshold && var_j2 < kZeroThreshold;
    ProbDist p = all_zero ? born_probabilities(rho, a) : probs_from_covariances(rho, a);
    return ReconstructedDist{std::move(p), false, true};
  }

  double p1 = std::sqrt(std::max(0.0, (var_j2 + d) * den2 / den1));
  double p2 = std::sqrt(std::max(0.0, (var_j2 * var_j2 - d * d) / den2));
  double p3 = std::sqrt(std::max(0.0, (var_j2 - d) * den2 / den3));
  double sum = p1 + p2 + p3;
  return ReconstructedDist{ProbDist({p1 / sum, p2 / sum, p3 / sum}), false, false};
}

}  // namespace urequiv
