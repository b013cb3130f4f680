// SPDX-License-Identifier: Apache-2.0
#include "urequiv/relations.hpp"

#include <algorithm>
#include <cmath>

namespace urequiv {

namespace {

constexpr double kSlackTol = 1e-9;

const RelationContext& need_obs(const RelationContext& ctx, std::size_t count) {
  if (ctx.obs.size() < count)
    fail(ErrorCode::dimension_mismatch, "relation needs more observables");
  for (const Observable& o : ctx.obs)
    if (o.dim() != ctx.rho.dim())
      fail(ErrorCode::dimension_mismatch, "observable/state dimension mismatch");
  return ctx;
}

void need_qubit(const RelationContext& ctx) {
  if (ctx.rho.dim() != 2) fail(ErrorCode::not_qubit, "requires a qubit state");
}

// Unit-Pauli observable: eigenvalues +-1.
void need_unit_spectrum(const Observable& o) {
  const auto& e = o.eigenvalues();
  if (e.size() != 2 || std::abs(e[0] - 1.0) > 1e-9 || std::abs(e[1] + 1.0) > 1e-9)
    fail(ErrorCode::not_qubit, "requires eigenvalues +-1");
}

void need_spin1(const RelationContext& ctx) {
  if (ctx.rho.dim() != 3) fail(ErrorCode::not_spin_one, "requires a spin-1 state");
  for (const Observable& o : ctx.obs) {
    const auto& e = o.eigenvalues();
    if (e.size() != 3 || std::abs(e[0] - 1.0) > 1e-9 || std::abs(e[1]) > 1e-9 ||
        std::abs(e[2] + 1.0) > 1e-9)
      fail(ErrorCode::not_spin_one, "requires spectrum {1, 0, -1}");
  }
}

double half_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * real_trace_product(a, b);
}

double purity_p2(const DensityMatrix& rho) { return 2.0 * rho.purity() - 1.0; }

double alpha_at(const RelationContext& ctx, std::size_t i) {
  if (i < ctx.alphas.size()) return ctx.alphas[i];
  if (!ctx.alphas.empty()) return ctx.alphas.front();
  return 1.0;
}

double shannon(const DensityMatrix& rho, const Observable& o) {
  return renyi_entropy(born_probabilities(rho, o), 1.0);
}

double clamp_unit(double v) { return std::min(std::max(v, 0.0), 1.0); }

double pow_self(double t) { return t <= 0.0 ? 1.0 : std::pow(t, t); }

RelationReport make_inequality(std::string id, double lhs, double rhs, double slack) {
  RelationReport r;
  r.id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = slack;
  r.satisfied = slack >= -kSlackTol;
  return r;
}

RelationReport make_equality(std::string id, double lhs, double rhs) {
  RelationReport r;
  r.id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.is_equality = true;
  r.residual = std::abs(rhs - lhs);
  r.satisfied = r.residual <= kSlackTol;
  return r;
}

}  // namespace

RelationReport robertson(const RelationContext& ctx) {
  need_obs(ctx, 2);
  const Observable& a = ctx.obs[0];
  const Observable& b = ctx.obs[1];
  ComplexMatrix c = commutator_half_i(a.matrix(), b.matrix());
  double lhs = std::abs(expectation(ctx.rho, c));
  double rhs = std::sqrt(std::max(0.0, variance(ctx.rho, a))) *
               std::sqrt(std::max(0.0, variance(ctx.rho, b)));
  return make_inequality("robertson", lhs, rhs, rhs - lhs);
}

RelationReport maassen_uffink(const RelationContext& ctx) {
  need_obs(ctx, 2);
  double c = overlap_bound(ctx.obs[0], ctx.obs[1]);
  double lhs = -2.0 * std::log(c);
  double rhs = shannon(ctx.rho, ctx.obs[0]) + shannon(ctx.rho, ctx.obs[1]);
  return make_inequality("maassen_uffink", lhs, rhs, rhs - lhs);
}

RelationReport mu_variance_form(const RelationContext& ctx) {
  need_obs(ctx, 2);
  need_qubit(ctx);
  need_unit_spectrum(ctx.obs[0]);
  need_unit_spectrum(ctx.obs[1]);
  double va = clamp_unit(variance(ctx.rho, ctx.obs[0]));
  double vb = clamp_unit(variance(ctx.rho, ctx.obs[1]));
  double sa = std::sqrt(1.0 - va), sb = std::sqrt(1.0 - vb);
  double lhs = pow_self(0.5 * (1.0 + sa)) * pow_self(0.5 * (1.0 - sa)) *
               pow_self(0.5 * (1.0 + sb)) * pow_self(0.5 * (1.0 - sb));
  double c = overlap_bound(ctx.obs[0], ctx.obs[1]);
  double rhs = c * c;
  return make_inequality("mu_variance", lhs, rhs, rhs - lhs);
}

RelationReport majorization_variance(const RelationContext& ctx) {
  need_obs(ctx, 2);
  need_qubit(ctx);
  need_unit_spectrum(ctx.obs[0]);
  need_unit_spectrum(ctx.obs[1]);
  double va = clamp_unit(variance(ctx.rho, ctx.obs[0]));
  double vb = clamp_unit(variance(ctx.rho, ctx.obs[1]));
  double lhs = (1.0 + std::sqrt(1.0 - va)) * (1.0 + std::sqrt(1.0 - vb));
  double c = overlap_bound(ctx.obs[0], ctx.obs[1]);
  double rhs = (1.0 + c) * (1.0 + c);
  return make_inequality("majorization_variance", lhs, rhs, rhs - lhs);
}

RelationReport full_qubit_bound(const RelationContext& ctx) {
  need_obs(ctx, 2);
  need_qubit(ctx);
  const Observable& a = ctx.obs[0];
  const Observable& b = ctx.obs[1];
  for (const Observable* o : {&a, &b})
    if (std::abs(o->matrix().trace()) > 1e-9)
      fail(ErrorCode::not_qubit, "requires traceless observables");

  double a2 = half_trace_product(a.matrix(), a.matrix());
  double b2 = half_trace_product(b.matrix(), b.matrix());
  // kappa >= 0 gauge: B -> -B flips kappa but changes no variance or
  // entropy, and the square roots below cannot see the sign of <A><B>.
  double kappa = std::abs(half_trace_product(a.matrix(), b.matrix()));
  double p2 = purity_p2(ctx.rho);

  RenyiIndex ia = alpha_at(ctx, 0), ib = alpha_at(ctx, 1);
  double ga = a2 * qubit_variance_from_entropy(
                       renyi_entropy(born_probabilities(ctx.rho, a), ia), ia);
  double gb = b2 * qubit_variance_from_entropy(
                       renyi_entropy(born_probabilities(ctx.rho, b), ib), ib);

  double sa = a2 - ga;
  double sb = b2 - gb;
  if (sa < -1e-10 || sb < -1e-10)
    fail(ErrorCode::domain_error, "g exceeds the operator norm scale a^2");
  double lhs = (a2 * (p2 - 1.0) + ga) * (b2 * (p2 - 1.0) + gb);
  double root = std::sqrt(std::max(sa, 0.0)) * std::sqrt(std::max(sb, 0.0)) - kappa * p2;
  double rhs = root * root;
  return make_inequality("full_qubit", lhs, rhs, lhs - rhs);
}

double qubit_pure_boundary_slack(double h_a, double h_b, double abs_kappa,
                                 RenyiIndex alpha_a, RenyiIndex alpha_b) {
  double u = qubit_variance_from_entropy(h_a, alpha_a);
  double v = qubit_variance_from_entropy(h_b, alpha_b);
  double root = std::sqrt(1.0 - u) * std::sqrt(1.0 - v) - abs_kappa;
  return u * v - root * root;
}

RelationReport qubit_simple_bound(const RelationContext& ctx) {
  need_obs(ctx, 2);
  need_qubit(ctx);
  need_unit_spectrum(ctx.obs[0]);
  need_unit_spectrum(ctx.obs[1]);
  if (ctx.rho.purity() < 1.0 - 1e-6)
    fail(ErrorCode::domain_error, "pure-state relation evaluated on a mixed state");
  double kappa = std::min(
      std::abs(half_trace_product(ctx.obs[0].matrix(), ctx.obs[1].matrix())), 1.0);
  double h_a = shannon(ctx.rho, ctx.obs[0]);
  double h_b = shannon(ctx.rho, ctx.obs[1]);
  double u = qubit_variance_from_entropy(h_a, 1.0);
  double v = qubit_variance_from_entropy(h_b, 1.0);
  double root = std::sqrt(1.0 - u) * std::sqrt(1.0 - v) - kappa;
  return make_inequality("qubit_simple", u * v, root * root, u * v - root * root);
}

namespace {

std::array<Observable, 3> pauli_xyz() {
  return {pauli_observable({1.0, 0.0, 0.0}), pauli_observable({0.0, 1.0, 0.0}),
          pauli_observable({0.0, 0.0, 1.0})};
}

}  // namespace

RelationReport pauli_triple_equality(const RelationContext& ctx) {
  need_qubit(ctx);
  auto paulis = pauli_xyz();
  double lhs = 0.0;
  double collision_lhs = 0.0;
  for (int i = 0; i < 3; ++i) {
    ProbDist p = born_probabilities(ctx.rho, paulis[static_cast<std::size_t>(i)]);
    RenyiIndex idx = alpha_at(ctx, static_cast<std::size_t>(i));
    lhs += qubit_variance_from_entropy(renyi_entropy(p, idx), idx);
    collision_lhs += std::exp(-renyi_entropy(p, 2.0));
  }
  double rhs = 4.0 - 2.0 * ctx.rho.purity();
  RelationReport r = make_equality("pauli_triple", lhs, rhs);
  double collision_residual = std::abs(collision_lhs - (1.0 + ctx.rho.purity()));
  r.satisfied = r.satisfied && collision_residual <= kSlackTol;
  return r;
}

RelationReport pauli_collision_equality(const RelationContext& ctx) {
  need_qubit(ctx);
  auto paulis = pauli_xyz();
  double lhs = 0.0;
  for (const Observable& s : paulis)
    lhs += std::exp(-renyi_entropy(born_probabilities(ctx.rho, s), 2.0));
  return make_equality("pauli_collision", lhs, 1.0 + ctx.rho.purity());
}

double puchala_bound(double c_ab) {
  double t = 0.5 * (1.0 + c_ab);
  double t2 = t * t;
  return -std::log(t2 * t2 + (1.0 - t2) * (1.0 - t2));
}

RelationReport spin1_collision_bound(const RelationContext& ctx) {
  need_obs(ctx, 2);
  need_spin1(ctx);
  double c = puchala_bound(overlap_bound(ctx.obs[0], ctx.obs[1]));
  double rhs = renyi_entropy(born_probabilities(ctx.rho, ctx.obs[0]), 2.0) +
               renyi_entropy(born_probabilities(ctx.rho, ctx.obs[1]), 2.0);
  return make_inequality("spin1_collision", c, rhs, rhs - c);
}

RelationReport spin1_variance_bound(const RelationContext& ctx) {
  need_obs(ctx, 2);
  need_spin1(ctx);
  double factors[2];
  for (int i = 0; i < 2; ++i) {
    const ComplexMatrix& j = ctx.obs[static_cast<std::size_t>(i)].matrix();
    ComplexMatrix j2 = j * j;
    double vj = expectation(ctx.rho, j2) - std::pow(expectation(ctx.rho, j), 2);
    double vj2 = expectation(ctx.rho, j2 * j2) - std::pow(expectation(ctx.rho, j2), 2);
    factors[i] = 2.0 - vj - 3.0 * vj2;
  }
  double c = puchala_bound(overlap_bound(ctx.obs[0], ctx.obs[1]));
  double lhs = factors[0] * factors[1];
  double rhs = 4.0 * std::exp(-c);
  return make_inequality("spin1_variance", lhs, rhs, rhs - lhs);
}

void RelationRegistry::add(RelationEntry entry) {
  for (const RelationEntry& e : entries_)
    if (e.id == entry.id)
      fail(ErrorCode::argument_out_of_range, "duplicate relation id " + entry.id);
  entries_.push_back(std::move(entry));
}

const RelationEntry& RelationRegistry::get(const std::string& id) const {
  for (const RelationEntry& e : entries_)
    if (e.id == id) return e;
  fail(ErrorCode::unknown_relation, id);
}

bool RelationRegistry::contains(const std::string& id) const {
  for (const RelationEntry& e : entries_)
    if (e.id == id) return true;
  return false;
}

std::vector<std::string> RelationRegistry::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const RelationEntry& e : entries_) out.push_back(e.id);
  return out;
}

namespace {

// Samplers: a relation's natural random context, deterministic per seed.

RelationContext sample_any_dim(std::uint64_t seed) {
  SplitMix64 rng(seed);
  int dim = (seed % 2 == 0) ? 2 : 3;
  DensityMatrix rho = random_mixed(dim, rng);
  std::vector<Observable> obs;
  for (int i = 0; i < 2; ++i) {
    std::array<double, 3> axis = random_axis(rng);
    obs.push_back(dim == 2 ? pauli_observable(axis) : spin_operator(2, axis));
  }
  return RelationContext{std::move(rho), std::move(obs), {1.0, 1.0}};
}

RelationContext sample_qubit_mixed(std::uint64_t seed) {
  SplitMix64 rng(seed);
  DensityMatrix rho = random_mixed(2, rng);
  std::vector<Observable> obs{pauli_observable(random_axis(rng)),
                              pauli_observable(random_axis(rng))};
  return RelationContext{std::move(rho), std::move(obs), {1.0, 1.0}};
}

RelationContext sample_qubit_mixed_alphas(std::uint64_t seed) {
  static const double grid[3] = {0.5, 1.0, 2.0};
  SplitMix64 rng(seed);
  DensityMatrix rho = random_mixed(2, rng);
  std::vector<Observable> obs{pauli_observable(random_axis(rng)),
                              pauli_observable(random_axis(rng))};
  std::vector<double> alphas{grid[rng.next_u64() % 3], grid[rng.next_u64() % 3]};
  return RelationContext{std::move(rho), std::move(obs), std::move(alphas)};
}

RelationContext sample_qubit_pure(std::uint64_t seed) {
  SplitMix64 rng(seed);
  DensityMatrix rho = pure_state(random_pure(2, rng));
  std::vector<Observable> obs{pauli_observable(random_axis(rng)),
                              pauli_observable(random_axis(rng))};
  return RelationContext{std::move(rho), std::move(obs), {1.0, 1.0}};
}

RelationContext sample_pauli_triple(std::uint64_t seed) {
  static const double grid[4] = {0.5, 1.0, 2.0, 3.0};
  SplitMix64 rng(seed);
  DensityMatrix rho = random_mixed(2, rng);
  std::vector<double> alphas{grid[rng.next_u64() % 4], grid[rng.next_u64() % 4],
                             grid[rng.next_u64() % 4]};
  return RelationContext{std::move(rho), {}, std::move(alphas)};
}

RelationContext sample_spin1(std::uint64_t seed) {
  SplitMix64 rng(seed);
  DensityMatrix rho = random_mixed(3, rng);
  std::vector<Observable> obs{spin_operator(2, random_axis(rng)),
                              spin_operator(2, random_axis(rng))};
  return RelationContext{std::move(rho), std::move(obs), {2.0, 2.0}};
}

}  // namespace

RelationRegistry RelationRegistry::standard() {
  RelationRegistry reg;
  reg.add({"robertson", false, robertson, sample_any_dim});
  reg.add({"maassen_uffink", false, maassen_uffink, sample_any_dim});
  reg.add({"mu_variance", false, mu_variance_form, sample_qubit_mixed});
  reg.add({"majorization_variance", false, majorization_variance, sample_qubit_mixed});
  reg.add({"full_qubit", false, full_qubit_bound, sample_qubit_mixed_alphas});
  reg.add({"qubit_simple", false, qubit_simple_bound, sample_qubit_pure});
  reg.add({"pauli_triple", true, pauli_triple_equality, sample_pauli_triple});
  reg.add({"pauli_collision", true, pauli_collision_equality, sample_pauli_triple});
  reg.add({"spin1_collision", false, spin1_collision_bound, sample_spin1});
  reg.add({"spin1_variance", false, spin1_variance_bound, sample_spin1});
  return reg;
}

}  // namespace urequiv
