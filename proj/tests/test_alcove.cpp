#include "helpers.hpp"
#include "qkc/alcove.hpp"

#include <doctest.h>

using namespace th;

TEST_CASE("sequence shapes") {
  CHECK(theta_seq(1, 3).empty());
  CHECK(theta_seq(3, 3).size() == 2);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) CHECK(static_cast<int>(gamma_seq(k, n).size()) == 2 * n - k);
  CHECK(gamma_seq(1, 2).size() == 3);
  // the long root sits right after the (k, jbar) block
  const RootSequence g = gamma_seq(2, 4);
  CHECK(g[3].root == RootC{2, -2});
  CHECK(parse_sequence("theta:2", 3) == theta_seq(2, 3));
  CHECK_THROWS_AS(parse_sequence("zeta:2", 3), ConfigError);
  CHECK_THROWS_AS(parse_sequence("theta:4", 3), ConfigError);
}

TEST_CASE("empty set is always admissible") {
  const Qbg g(3);
  for (const auto& w : g.vertices()) {
    const auto A = admissible_subsets(g, w, gamma_seq(1, 3));
    REQUIRE_FALSE(A.empty());
    CHECK(A[0].positions.empty());
    CHECK(A[0].end == w);
    CHECK(A[0].down == zeros(3));
  }
}

TEST_CASE("listing at the mountain element, n = 3, k = 2") {
  const Qbg g(3);
  const auto th = admissible_subsets(g, mountain(2, 3), theta_seq(2, 3));
  REQUIRE(th.size() == 2);
  CHECK(th[1].end == mountain(1, 3));
  const RootSequence s = gamma_seq(2, 3);
  const auto ga = admissible_subsets(g, mountain(2, 3), s);
  REQUIRE(ga.size() == 4);
  for (const auto& a : ga) {
    if (a.size() == 1 && s[static_cast<std::size_t>(a.positions[0])].root == RootC{2, -2}) {
      CHECK(a.end == prefix(1, 3));
      CHECK(a.down == Exponents{0, 1, 1});
    }
    if (a.size() == 1 && s[static_cast<std::size_t>(a.positions[0])].root == RootC{2, 3}) {
      CHECK(a.end == mountain(3, 3));
      CHECK(a.down == Exponents{0, 1, 0});
    }
    if (a.size() == 2) {
      CHECK(a.end == prefix(2, 3));
      CHECK(a.down == Exponents{0, 1, 1});
    }
  }
}

TEST_CASE("chain sets") {
  // consecutive letters: a single chain
  CHECK(s_chains(2, 1, 3) == std::vector<std::vector<int>>{{1}});
  CHECK(s_chains(-3, 3, 3).size() == 1);
  // 2^{d-1} against explicit enumeration of subsets of the letters in between
  const int n = 3;
  const auto ls = letters(n);
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = a + 1; b < ls.size(); ++b) {
      const auto ch = s_chains(ls[b], ls[a], n);
      CHECK(ch.size() == (std::size_t{1} << (b - a - 1)));
      for (const auto& c : ch) {
        CHECK(c.back() == ls[a]);
        for (std::size_t i = 1; i < c.size(); ++i) CHECK(letter_less(c[i], c[i - 1], n));
      }
    }
  // the barred chain used by the second family
  bool found = false;
  for (const auto& c : s_chains(-1, -3, 3)) found = found || c == std::vector<int>{-2, -3};
  CHECK(found);
  CHECK_THROWS_AS(s_chains(1, 2, 3), ConfigError);
}

TEST_CASE("filtered family contains {-(k,k+1)} at the mountain element") {
  const int n = 4;
  const Qbg g(n);
  for (int k = 1; k < n; ++k) {
    const RootSequence s = gamma_seq(k, n);
    bool seen = false;
    for (const auto& a : a_filtered(g, mountain(k, n), -k, -(k + 1)))
      if (a.size() == 1 && s[static_cast<std::size_t>(a.positions[0])].root == RootC{k, k + 1}) {
        seen = true;
        CHECK(a.end == mountain(k + 1, n));
      }
    CHECK(seen);
  }
}

TEST_CASE("library checks") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(all_pass(check_listings(n)));
    CHECK(all_pass(check_alcove_invariants(n)));
  }
}
