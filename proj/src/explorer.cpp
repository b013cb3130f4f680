// SPDX-License-Identifier: Apache-2.0
#include "urequiv/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "urequiv/parallel.hpp"

namespace urequiv {

namespace {

constexpr double kSlackTol = 1e-9;
constexpr double kDiameterTol = 1e-10;

struct NmResult {
  std::vector<double> x;
  double f = 0.0;
  long evaluations = 0;
  bool converged = false;
  double f_min_seen = std::numeric_limits<double>::infinity();
  double f_max_seen = -std::numeric_limits<double>::infinity();
};

// Downhill simplex (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
// Converged when every vertex sits within kDiameterTol of the best one.
NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& fn,
                     const std::vector<double>& x0, double step, int max_iter) {
  std::size_t d = x0.size();
  NmResult res;
  std::vector<std::vector<double>> v(d + 1, x0);
  for (std::size_t i = 0; i < d; ++i) v[i + 1][i] += step;
  std::vector<double> f(d + 1);
  auto eval = [&](const std::vector<double>& x) {
    double y = fn(x);
    ++res.evaluations;
    res.f_min_seen = std::min(res.f_min_seen, y);
    res.f_max_seen = std::max(res.f_max_seen, y);
    return y;
  };
  for (std::size_t i = 0; i <= d; ++i) f[i] = eval(v[i]);

  auto order_simplex = [&] {
    std::vector<std::size_t> idx(d + 1);
    for (std::size_t i = 0; i <= d; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    std::vector<std::vector<double>> nv(d + 1);
    std::vector<double> nf(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      nv[i] = std::move(v[idx[i]]);
      nf[i] = f[idx[i]];
    }
    v = std::move(nv);
    f = std::move(nf);
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    order_simplex();
    double diameter = 0.0;
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        diameter = std::max(diameter, std::abs(v[i][k] - v[0][k]));
    if (diameter < kDiameterTol) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) centroid[k] += v[i][k];
    }
    for (double& c : centroid) c /= static_cast<double>(d);

    auto blend = [&](double coef) {
      std::vector<double> x(d);
      for (std::size_t k = 0; k < d; ++k)
        x[k] = centroid[k] + coef * (centroid[k] - v[d][k]);
      return x;
    };

    std::vector<double> xr = blend(1.0);
    double fr = eval(xr);
    if (fr < f[0]) {
      std::vector<double> xe = blend(2.0);
      double fe = eval(xe);
      if (fe < fr) {
        v[d] = std::move(xe);
        f[d] = fe;
      } else {
        v[d] = std::move(xr);
        f[d] = fr;
      }
      continue;
    }
    if (fr < f[d - 1]) {
      v[d] = std::move(xr);
      f[d] = fr;
      continue;
    }
    // Contraction, outside or inside of the worst vertex.
    bool outside = fr < f[d];
    std::vector<double> xc = blend(outside ? 0.5 : -0.5);
    double fc = eval(xc);
    if (fc < (outside ? fr : f[d])) {
      v[d] = std::move(xc);
      f[d] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t k = 0; k < d; ++k) v[i][k] = v[0][k] + 0.5 * (v[i][k] - v[0][k]);
      f[i] = eval(v[i]);
    }
  }
  order_simplex();
  res.x = v[0];
  res.f = f[0];
  return res;
}

void need_unit_pauli(const Observable& o) {
  const auto& e = o.eigenvalues();
  if (e.size() != 2 || std::abs(e[0] - 1.0) > 1e-9 || std::abs(e[1] + 1.0) > 1e-9)
    fail(ErrorCode::not_qubit, "requires a qubit observable with eigenvalues +-1");
}

StateVector params_to_state(const std::vector<double>& params) {
  std::size_t dim = params.size() / 2;
  std::vector<Complex> amps(dim);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    amps[i] = Complex(params[i], params[dim + i]);
    norm2 += std::norm(amps[i]);
  }
  double inv = 1.0 / std::sqrt(norm2);
  for (Complex& a : amps) a *= inv;
  return StateVector(std::move(amps));
}

constexpr double kZeroNormPenalty = 1e100;

double guarded_objective(const std::function<double(const StateVector&)>& objective,
                         const std::vector<double>& params) {
  double norm2 = 0.0;
  for (double p : params) norm2 += p * p;
  if (norm2 < 1e-24) return kZeroNormPenalty;
  return objective(params_to_state(params));
}

}  // namespace

RegionSample map_region(const Observable& a, const Observable& b, long n,
                        std::uint64_t seed, RenyiIndex alpha) {
  if (n < 0) fail(ErrorCode::argument_out_of_range, "sample count must be >= 0");
  need_unit_pauli(a);
  need_unit_pauli(b);
  double kappa_signed = 0.5 * real_trace_product(a.matrix(), b.matrix());
  double kappa = std::min(std::abs(kappa_signed), 1.0);

  RegionSample out;
  out.theta_ab_deg =
      std::acos(std::min(std::max(kappa_signed, -1.0), 1.0)) * 180.0 / 3.14159265358979323846;
  out.points.resize(static_cast<std::size_t>(n));
  std::vector<unsigned char> violated(static_cast<std::size_t>(n), 0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    StateVector psi = random_pure(2, seed + i);
    double h_a = renyi_entropy(born_probabilities(psi, a), alpha);
    double h_b = renyi_entropy(born_probabilities(psi, b), alpha);
    out.points[i] = RegionPoint{h_a, h_b, 1.0};
    double slack = qubit_pure_boundary_slack(h_a, h_b, kappa, alpha, alpha);
    violated[i] = slack < -kSlackTol ? 1 : 0;
  });
  for (unsigned char v : violated) out.violations += v;
  return out;
}

OptimizationResult minimize_over_pure(
    const std::function<double(const StateVector&)>& objective, int dim,
    int restarts, std::uint64_t seed) {
  if (restarts < 1) fail(ErrorCode::argument_out_of_range, "restarts must be >= 1");
  if (dim < 2) fail(ErrorCode::dimension_mismatch, "dim must be >= 2");
  std::size_t d = 2 * static_cast<std::size_t>(dim);
  auto fn = [&](const std::vector<double>& p) { return guarded_objective(objective, p); };

  std::vector<NmResult> runs(static_cast<std::size_t>(restarts));
  parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
    SplitMix64 rng(seed + r);
    std::vector<double> x0(d);
    for (double& x : x0) x = rng.next_gaussian();
    runs[r] = nelder_mead(fn, x0, 0.5, 20000);
  });

  std::size_t best = 0;
  long evaluations = 0;
  double f_min = std::numeric_limits<double>::infinity();
  double f_max = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < runs.size(); ++r) {
    evaluations += runs[r].evaluations;
    f_min = std::min(f_min, runs[r].f_min_seen);
    f_max = std::max(f_max, runs[r].f_max_seen);
    if (runs[r].f < runs[best].f) best = r;
  }
  if (f_min == f_max)
    fail(ErrorCode::degenerate_objective, "objective is constant over every restart");

  OptimizationResult out;
  out.best_value = runs[best].f;
  out.best_params = runs[best].x;
  out.restarts = restarts;
  out.evaluations = evaluations;
  out.converged = runs[best].converged;
  return out;
}

OptimizationResult saturate_boundary(const Observable& a, const Observable& b,
                                     double target_ha, int restarts,
                                     std::uint64_t seed) {
  const double ln2 = std::log(2.0);
  need_unit_pauli(a);
  need_unit_pauli(b);
  if (restarts < 1) fail(ErrorCode::argument_out_of_range, "restarts must be >= 1");
  if (target_ha < -1e-12 || target_ha > ln2 + 1e-12)
    fail(ErrorCode::infeasible_target, "target H(A) outside [0, ln 2]");
  target_ha = std::min(std::max(target_ha, 0.0), ln2);

  auto penalized = [&](double weight) {
    return [&, weight](const std::vector<double>& params) {
      double norm2 = 0.0;
      for (double p : params) norm2 += p * p;
      if (norm2 < 1e-24) return kZeroNormPenalty;
      StateVector psi = params_to_state(params);
      double h_a = renyi_entropy(born_probabilities(psi, a), 1.0);
      double h_b = renyi_entropy(born_probabilities(psi, b), 1.0);
      double dev = h_a - target_ha;
      return h_b + weight * dev * dev;
    };
  };
  auto stage1 = penalized(1e6);
  auto stage2 = penalized(1e8);

  struct Run {
    NmResult nm;
    long evaluations = 0;
  };
  std::vector<Run> runs(static_cast<std::size_t>(restarts));
  parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
    SplitMix64 rng(seed + r);
    std::vector<double> x0(4);
    for (double& x : x0) x = rng.next_gaussian();
    NmResult first = nelder_mead(stage1, x0, 0.5, 20000);
    NmResult second = nelder_mead(stage2, first.x, 0.01, 20000);
    runs[r].evaluations = first.evaluations + second.evaluations;
    runs[r].nm = std::move(second);
  });

  std::size_t best = 0;
  long evaluations = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    evaluations += runs[r].evaluations;
    if (runs[r].nm.f < runs[best].nm.f) best = r;
  }

  StateVector psi = params_to_state(runs[best].nm.x);
  double h_a = renyi_entropy(born_probabilities(psi, a), 1.0);
  if (std::abs(h_a - target_ha) >= 1e-6)
    fail(ErrorCode::infeasible_target,
         "optimizer could not pin H(A) to the target within 1e-6");

  OptimizationResult out;
  out.best_value = runs[best].nm.f;
  out.best_params = runs[best].nm.x;
  out.restarts = restarts;
  out.evaluations = evaluations;
  out.converged = runs[best].nm.converged;
  return out;
}

ScanSummary scan_violations(const RelationRegistry& registry,
                            const std::vector<std::string>& relation_ids,
                            long n, std::uint64_t seed) {
  if (n < 0) fail(ErrorCode::argument_out_of_range, "sample count must be >= 0");
  ScanSummary summary;
  for (std::size_t r = 0; r < relation_ids.size(); ++r) {
    const RelationEntry& entry = registry.get(relation_ids[r]);
    ScanEntry tally;
    tally.id = entry.id;
    tally.n = n;
    if (n == 0) {
      summary.entries.push_back(std::move(tally));
      continue;
    }
    std::vector<double> slacks(static_cast<std::size_t>(n));
    std::uint64_t base = seed + static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
      RelationContext ctx = entry.sample(base + i);
      RelationReport rep = entry.evaluate(ctx);
      slacks[i] = rep.is_equality ? -rep.residual : rep.slack;
    });
    tally.worst_slack = slacks.front();
    for (double s : slacks) {
      tally.worst_slack = std::min(tally.worst_slack, s);
      if (s < -kSlackTol) ++tally.violations;
    }
    summary.entries.push_back(std::move(tally));
  }
  return summary;
}

}  // namespace urequiv
