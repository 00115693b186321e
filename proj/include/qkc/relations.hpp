#pragma once

#include "qkc/check.hpp"
#include "qkc/rings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qkc {

// sum_l c_l X_l = 0, X_l standing for F_l
struct RelationVector {
  int n = 0;
  std::vector<GroupRingElement> c;

  RelationVector() = default;
  explicit RelationVector(int rank) : n(rank), c(static_cast<std::size_t>(rank + 1), GroupRingElement(rank)) {}

  RelationVector shifted(const Exponents& mu) const;
  // sum_l c_l X_l for given values of the unknowns
  GroupRingElement apply(const std::vector<GroupRingElement>& X) const;
  bool operator==(const RelationVector& o) const { return n == o.n && c == o.c; }
  std::string str() const;
  Json to_json() const;
};

// first l where the two vectors differ
std::optional<std::string> first_difference(const RelationVector& a, const RelationVector& b);

RelationVector base_relation(int n);

// multiply by e^{eps_i}, apply D_i, divide by e^{eps_i}(1 - e^{eps_i + eps_{i+1}})
RelationVector relation_step(const RelationVector& rel, int i);
RelationVector derive_secondary(const RelationVector& base);
RelationVector secondary_literal(int n);
// the nested (2k-2)-fold sum, 2 <= k <= n-1
RelationVector system_arbitrary(int k, int n);
// k = 2 takes the secondary relation and first multiplies by e^{n eps_1}
RelationVector induction_step(const RelationVector& prev, int k);

// base, secondary, then the derived relations for k = 2..n-1
std::vector<RelationVector> derivation_chain(int n);

// (x_1..x_k, x_k^{-1}..x_1^{-1}) with x_i = e^{eps_i}
std::vector<Exponents> paired_vars(int k, int n);
std::vector<Exponents> paired_vars_range(int a, int b, int n);
// h_m and e_m of monomial variables, through the one-variable-at-a-time recursion
GroupRingElement complete_h(int m, const std::vector<Exponents>& vars, int n);
GroupRingElement elementary_e(int m, const std::vector<Exponents>& vars, int n);
// H^k_l and E^n_l
GroupRingElement complete_H(int l, int k, int n);
GroupRingElement elementary_E(int l, int n);

// sum_{l <= n-k} (-1)^l (H^{k+1}_{n-l-k} - H^{k+1}_{n-l-k-2}) X_l
RelationVector hform(int k, int n);
std::vector<RelationVector> assemble_system(int n);
// e^{-(n-1) eps_1 + eps_2 + ... + eps_k}
Exponents system_prefactor(int k, int n);
// alternative prefactor, agrees only at k = n-1: e^{-(2n-k-2) eps_1 + eps_2 + ... + eps_{n-1}}
Exponents alt_prefactor(int k, int n);
// the relations for k = 0..n-1 built from the Demazure chain and the prefactors
std::vector<RelationVector> derived_system(int n);

// X_0 = 1 then k = n-1 down to 0; throws if a leading coefficient is not a unit
std::vector<GroupRingElement> solve_system(const std::vector<RelationVector>& system);
std::vector<GroupRingElement> solve_system(int n);

// truncated series in t with Z[P] coefficients
using TSeries = std::vector<GroupRingElement>;
TSeries t_mul(const TSeries& a, const TSeries& b, int dt);
std::vector<CheckRecord> check_generating_identities(int n, int dt);

std::vector<CheckRecord> check_base_relation(int n, int degree_cap);
std::vector<CheckRecord> check_derivation(int n);
std::vector<CheckRecord> check_system(int n);
std::vector<CheckRecord> check_csym_props(int n, int max_m = 6);

// nested sum of the fourth complete-symmetric identity in N variables; last_plus_one adds 1 to the x_{N-1} exponent
GroupRingElement csym_nested_sum(int N, int m, bool last_plus_one);

}  // namespace qkc
