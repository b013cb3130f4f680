// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "urequiv/entropy.hpp"
#include "urequiv/observables.hpp"

namespace urequiv {

/// Everything a relation needs to be evaluated: the state, the observables
/// it constrains, and the Renyi indices (one per observable where
/// applicable). Derived scalars (a^2 = Tr[A^2]/2, kappa = Tr[AB]/2,
/// p^2 = 2 Tr[rho^2] - 1, c_ab) are recomputed from these fields on every
/// evaluation, never cached.
struct RelationContext {
  DensityMatrix rho;
  std::vector<Observable> obs;
  std::vector<double> alphas;
};

/// One evaluation record. Convention: slack >= 0 means satisfied, whatever
/// direction the source inequality is written in; inequalities are
/// satisfied within -1e-9, equalities within |residual| <= 1e-9.
struct RelationReport {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool satisfied = false;
  bool is_equality = false;
  double residual = 0.0;
};

/// dA dB >= |<C>|, C = (AB - BA)/(2i). Any dimension.
RelationReport robertson(const RelationContext& ctx);

/// H(A) + H(B) >= -2 ln c_ab (Shannon). Any dimension.
RelationReport maassen_uffink(const RelationContext& ctx);

/// Qubit variance form of the same bound:
/// a_+^{a_+} a_-^{a_-} b_+^{b_+} b_-^{b_-} <= c_ab^2, with 0^0 := 1.
RelationReport mu_variance_form(const RelationContext& ctx);

/// (1 + sqrt(1-dA^2))(1 + sqrt(1-dB^2)) <= (1 + c_ab)^2. Qubit.
RelationReport majorization_variance(const RelationContext& ctx);

/// [a^2(p^2-1) + g_a(A)][b^2(p^2-1) + g_b(B)]
///   >= [sqrt(a^2 - g_a(A)) sqrt(b^2 - g_b(B)) - kappa p^2]^2,
/// evaluated entropy-first (measure H, invert to g). The square roots
/// discard the sign of <A><B>, so the relation is evaluated in the
/// kappa >= 0 gauge (B -> -B leaves variances and entropies unchanged).
RelationReport full_qubit_bound(const RelationContext& ctx);

/// Pure-state, unit-Pauli reduction of the full bound:
/// g1(A) g1(B) >= [sqrt(1-g1(A)) sqrt(1-g1(B)) - cos(theta_ab)]^2.
RelationReport qubit_simple_bound(const RelationContext& ctx);

/// g_alpha(sigma_x) + g_beta(sigma_y) + g_gamma(sigma_z) = 4 - 2 Tr[rho^2].
/// Also checks the alpha=beta=gamma=2 collision form; satisfied requires
/// both residuals <= 1e-9.
RelationReport pauli_triple_equality(const RelationContext& ctx);

/// e^{-H2(sigma_x)} + e^{-H2(sigma_y)} + e^{-H2(sigma_z)} = 1 + Tr[rho^2].
RelationReport pauli_collision_equality(const RelationContext& ctx);

/// H2(J_a) + H2(J_b) >= c with c from puchala_bound(c_ab). Spin-1.
RelationReport spin1_collision_bound(const RelationContext& ctx);

/// [2 - V(J_a) - 3V(J_a^2)][2 - V(J_b) - 3V(J_b^2)] <= 4 e^{-c}. Spin-1.
RelationReport spin1_variance_bound(const RelationContext& ctx);

/// c = -ln[((1+c_ab)/2)^4 + (1 - ((1+c_ab)/2)^2)^2].
double puchala_bound(double c_ab);

/// Slack of the pure-qubit bound expressed directly in entropies, shared by
/// qubit_simple_bound, the region mapper and the boundary-saturation check:
/// u v - (sqrt(1-u) sqrt(1-v) - |kappa|)^2 with u = g_alpha(h_a) etc.
double qubit_pure_boundary_slack(double h_a, double h_b, double abs_kappa,
                                 RenyiIndex alpha_a, RenyiIndex alpha_b);

struct RelationEntry {
  std::string id;
  bool is_equality = false;
  std::function<RelationReport(const RelationContext&)> evaluate;
  /// Draws a (state, observables, indices) context appropriate to the
  /// relation, deterministically from the seed.
  std::function<RelationContext(std::uint64_t seed)> sample;
};

/// Ordered, by-id lookup of evaluable relations. `standard()` registers the
/// ten stable ids: robertson, maassen_uffink, mu_variance,
/// majorization_variance, full_qubit, qubit_simple, pauli_triple,
/// pauli_collision, spin1_collision, spin1_variance.
class RelationRegistry {
 public:
  void add(RelationEntry entry);
  const RelationEntry& get(const std::string& id) const;
  bool contains(const std::string& id) const;
  std::vector<std::string> ids() const;

  static RelationRegistry standard();

 private:
  std::vector<RelationEntry> entries_;
};

}  // namespace urequiv
