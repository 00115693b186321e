#include "helpers.hpp"
#include "qkc/relations.hpp"

#include <doctest.h>

#include <functional>

using namespace th;

namespace {

// x_1..x_N, x_N^{-1}..x_1^{-1} as exponent vectors
std::vector<Exponents> vars(int N) {
  std::vector<Exponents> v;
  for (int i = 1; i <= N; ++i) v.push_back(unit_vector(N, i));
  for (int i = N; i >= 1; --i) v.push_back(unit_vector(N, i, -1));
  return v;
}

// sum over subsets of size m
GroupRingElement brute_e(int m, int N) {
  const auto v = vars(N);
  GroupRingElement r(N);
  for (unsigned mask = 0; mask < (1u << v.size()); ++mask) {
    if (std::popcount(mask) != m) continue;
    Exponents x = zeros(N);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask >> i & 1) x = add_exp(x, v[i]);
    r.add_term(x, 1);
  }
  return r;
}

// sum over multisets of size m drawn from x_1..x_k, x_k^{-1}..x_1^{-1} in rank N
GroupRingElement brute_h(int m, int k, int N) {
  std::vector<Exponents> v;
  for (int i = 1; i <= k; ++i) {
    v.push_back(unit_vector(N, i));
    v.push_back(unit_vector(N, i, -1));
  }
  GroupRingElement r(N);
  if (m < 0) return r;
  std::function<void(std::size_t, int, Exponents)> rec = [&](std::size_t i, int left, Exponents x) {
    if (i + 1 == v.size()) {
      r.add_term(add_exp(x, scale_exp(v[i], left)), 1);
      return;
    }
    for (int c = 0; c <= left; ++c) rec(i + 1, left - c, add_exp(x, scale_exp(v[i], c)));
  };
  rec(0, m, zeros(N));
  return r;
}

}  // namespace

TEST_CASE("base relation at n = 1, 2") {
  const RelationVector r1 = base_relation(1);
  CHECK(r1.c[0] == e({-1}) + e({1}));
  CHECK(r1.c[1] == GroupRingElement::constant(1, -1));
  const RelationVector r2 = base_relation(2);
  CHECK(r2.c[0] == e({-2, 0}) + e({2, 0}));
  CHECK(r2.c[1] == -(e({-1, 0}) + e({1, 0})));
  CHECK(r2.c[2] == GroupRingElement::constant(2, 1));
}

TEST_CASE("elementary and complete symmetric against brute force") {
  for (int N = 1; N <= 4; ++N)
    for (int m = 0; m <= 2 * N; ++m) CHECK(elementary_E(m, N) == brute_e(m, N));
  for (int N = 1; N <= 3; ++N)
    for (int k = 1; k <= N; ++k)
      for (int m = -2; m <= 5; ++m) CHECK(complete_H(m, k, N) == brute_h(m, k, N));
  CHECK(elementary_E(0, 3) == GroupRingElement::constant(3, 1));
  CHECK(complete_H(0, 2, 3) == GroupRingElement::constant(3, 1));
}

TEST_CASE("E_{n+l} = E_{n-l}") {
  for (int n = 1; n <= 5; ++n)
    for (int l = 1; l <= n; ++l) CHECK(brute_e(n + l, n) == brute_e(n - l, n));
}

TEST_CASE("x^2 + x^-2 = h_2 - h_0 in two variables") {
  CHECK(e({2}) + e({-2}) == brute_h(2, 1, 1) - brute_h(0, 1, 1));
}

TEST_CASE("secondary relation") {
  for (int n = 2; n <= 5; ++n) {
    const RelationVector s = derive_secondary(base_relation(n));
    CHECK(s == secondary_literal(n));
    CHECK(s.c[static_cast<std::size_t>(n)].is_zero());
    CHECK(s.c[static_cast<std::size_t>(n - 1)] == e(unit_vector(n, 1, -1), n % 2 ? 1 : -1));
  }
}

TEST_CASE("induction chain matches the nested sums") {
  for (int n = 3; n <= 5; ++n) {
    const auto chain = derivation_chain(n);
    for (int k = 2; k <= n - 1; ++k) CHECK(chain[static_cast<std::size_t>(k)] == system_arbitrary(k, n));
  }
}

TEST_CASE("alternative prefactor only works at k = n - 1") {
  for (int n = 3; n <= 6; ++n) {
    const auto chain = derivation_chain(n);
    for (int k = 2; k <= n - 1; ++k) {
      const RelationVector& d = chain[static_cast<std::size_t>(k)];
      CHECK(d.shifted(system_prefactor(k, n)) == hform(k, n));
      CHECK((d.shifted(alt_prefactor(k, n)) == hform(k, n)) == (k == n - 1));
    }
  }
}

TEST_CASE("nested identity needs the +1 on the second-to-last exponent") {
  for (int N = 3; N <= 5; ++N)
    for (int m = 1; m <= 6; ++m) {
      const GroupRingElement want = brute_h(m, N, N) - brute_h(m - 2, N, N);
      CHECK(csym_nested_sum(N, m, true) == want);
      CHECK_FALSE(csym_nested_sum(N, m, false) == want);
    }
}

TEST_CASE("system solution") {
  // n = 1 by hand
  const auto X1 = solve_system(1);
  REQUIRE(X1.size() == 2);
  CHECK(X1[1] == e({1}) + e({-1}));
  for (int n = 1; n <= 6; ++n) {
    const auto X = solve_system(n);
    for (int l = 0; l <= n; ++l) CHECK(X[static_cast<std::size_t>(l)] == brute_e(l, n));
  }
  for (int n = 1; n <= 4; ++n) CHECK(solve_system(derived_system(n)) == solve_system(assemble_system(n)));
}

TEST_CASE("solver rejects a non-unit leading coefficient") {
  auto sys = assemble_system(3);
  for (auto& c : sys[1].c) c = c.scaled(2);
  CHECK_THROWS_AS(solve_system(sys), DivisibilityError);
}

TEST_CASE("suite checks") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(all_pass(check_base_relation(n, 2 * n + 2)));
    CHECK(all_pass(check_derivation(n)));
    CHECK(all_pass(check_system(n)));
    CHECK(all_pass(check_csym_props(n)));
    CHECK(all_pass(check_generating_identities(n, 2 * n)));
  }
}
