#include "helpers.hpp"
#include "qkc/weyl.hpp"

#include <doctest.h>

#include <deque>
#include <map>

using namespace th;

TEST_CASE("group orders") {
  CHECK(enumerate_group(1).size() == 2);
  CHECK(enumerate_group(2).size() == 8);
  CHECK(enumerate_group(4).size() == 384);
  CHECK(enumerate_group(1)[0].str() != enumerate_group(1)[1].str());
  CHECK_THROWS_AS(enumerate_group(0), ConfigError);
  CHECK_THROWS_AS(enumerate_group(7), ConfigError);
}

TEST_CASE("group axioms") {
  const auto G = enumerate_group(3);
  const SignedPerm id = SignedPerm::identity(3);
  for (std::size_t a = 0; a < G.size(); a += 5)
    for (std::size_t b = 0; b < G.size(); b += 7) {
      CHECK((G[a] * G[b]) * G[(a + b) % G.size()] == G[a] * (G[b] * G[(a + b) % G.size()]));
      CHECK(G[a] * G[a].inverse() == id);
      CHECK(G[a] * id == G[a]);
    }
}

TEST_CASE("signed action and window parse") {
  const SignedPerm w = SignedPerm::parse("[2,3,-1]");
  CHECK(w(1) == 2);
  CHECK(w(-1) == -2);
  CHECK(w(3) == -1);
  CHECK(w.str() == SignedPerm::parse(w.str()).str());
  CHECK(w.act_weight({1, 0, 0}) == Exponents{0, 1, 0});
  CHECK(w.act_weight({0, 0, 1}) == Exponents{-1, 0, 0});
  CHECK_THROWS(SignedPerm::parse("[1,1]"));
}

TEST_CASE("reflections") {
  const int n = 3;
  const SignedPerm s = reflection({2, -2}, n);
  CHECK(s(2) == -2);
  CHECK(s(1) == 1);
  CHECK(s(3) == 3);
  for (const auto& r : positive_roots(n)) CHECK(reflection(r, n) * reflection(r, n) == SignedPerm::identity(n));
  CHECK(positive_roots(4).size() == 16);
}

TEST_CASE("mountain element in window notation") {
  CHECK(mountain(1, 3).window() == std::vector<int>{-1, 2, 3});
  CHECK(mountain(2, 3).window() == std::vector<int>{2, -1, 3});
  CHECK(mountain(3, 3).window() == std::vector<int>{2, 3, -1});
  CHECK(mountain(2, 4) == word({1, 2, 3, 4, 3, 2}, 4));
  CHECK(prefix(2, 3) == word({1, 2}, 3));
}

TEST_CASE("length against breadth-first search over simple reflections") {
  for (int n = 1; n <= 3; ++n) {
    std::map<SignedPerm, int> dist;
    std::deque<SignedPerm> queue{SignedPerm::identity(n)};
    dist[queue.front()] = 0;
    while (!queue.empty()) {
      const SignedPerm w = queue.front();
      queue.pop_front();
      for (int i = 1; i <= n; ++i) {
        const SignedPerm y = w * simple_reflection(i, n);
        if (!dist.count(y)) {
          dist[y] = dist[w] + 1;
          queue.push_back(y);
        }
      }
    }
    CHECK(dist.size() == enumerate_group(n).size());
    for (const auto& [w, d] : dist) CHECK(length(w) == d);
    CHECK(length(longest_element(n)) == n * n);
  }
  CHECK(length(word({1, 2}, 2)) == 2);
}

TEST_CASE("simple reflections change length by one") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : enumerate_group(n))
      for (int i = 1; i <= n; ++i) CHECK(std::abs(length(w * simple_reflection(i, n)) - length(w)) == 1);
}

TEST_CASE("Cartan matrix of C_3") {
  const int M[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(pairing(simple_root(i, 3), simple_coroot_eps(j, 3)) == M[i - 1][j - 1]);
}

TEST_CASE("coroots in the alpha basis pair correctly with eps") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : positive_roots(n)) CHECK(alpha_to_eps(coroot_alpha(r, n)) == coroot_eps(r, n));
  // (2 eps_i)^vee = alpha_i^vee + ... + alpha_n^vee
  CHECK(coroot_alpha({2, -2}, 4) == Exponents{0, 1, 1, 1});
  CHECK(coroot_alpha({1, 3}, 4) == Exponents{1, 1, 0, 0});
}

TEST_CASE("longest element acts by -1") {
  for (int n = 1; n <= 4; ++n) {
    const SignedPerm w0 = longest_element(n);
    std::mt19937 rng(static_cast<unsigned>(n));
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 10; ++t) {
      Exponents lam(static_cast<std::size_t>(n));
      for (auto& x : lam) x = d(rng);
      CHECK(w0.act_weight(lam) == neg_exp(lam));
    }
  }
}

TEST_CASE("Demazure operator examples") {
  const GroupRingElement one = GroupRingElement::constant(2, 1);
  CHECK(demazure(1, one) == one);
  CHECK(demazure(1, e({0, 1})) == e({0, 1}) + e({1, 0}));
  // <eps_1, alpha_1^vee> = 1
  CHECK(demazure(1, e({1, 0})).is_zero());
  CHECK(demazure(2, e({0, 1})).is_zero());
}

TEST_CASE("Demazure closed form = fraction form, and idempotence") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Exponents> pts{Exponents{}};
    for (int c = 0; c < n; ++c) {
      std::vector<Exponents> next;
      for (const auto& p : pts)
        for (int v = -3; v <= 3; ++v) {
          auto q = p;
          q.push_back(v);
          next.push_back(q);
        }
      pts = next;
    }
    for (int i = 1; i <= n; ++i)
      for (const auto& nu : pts) {
        const GroupRingElement f = e(nu);
        const GroupRingElement d = demazure(i, f);
        CHECK(d == demazure_fraction(i, f));
        CHECK(demazure(i, d) == d);
      }
  }
}
