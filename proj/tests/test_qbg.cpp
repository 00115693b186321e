#include "helpers.hpp"
#include "qkc/qbg.hpp"

#include <doctest.h>

using namespace th;

TEST_CASE("C_1 graph has exactly two edges") {
  const auto edges = build_graph(1);
  REQUIRE(edges.size() == 2);
  CHECK(edges[0].source == SignedPerm::identity(1));
  CHECK(edges[0].kind == EdgeKind::Bruhat);
  CHECK(edges[1].source == SignedPerm::parse("[-1]"));
  CHECK(edges[1].kind == EdgeKind::Quantum);
  CHECK(edges[1].target == SignedPerm::identity(1));
}

TEST_CASE("simple roots from the identity are Bruhat edges") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      const RootC a = i < n ? RootC{i, i + 1} : RootC{n, -n};
      CHECK(edge_by_length(SignedPerm::identity(n), a) == EdgeKind::Bruhat);
    }
}

TEST_CASE("s_1 -> e is quantum in C_1") {
  CHECK(edge_by_length(SignedPerm::parse("[-1]"), {1, -1}) == EdgeKind::Quantum);
  CHECK(edge_by_pattern(SignedPerm::parse("[-1]"), {1, -1}) == EdgeKind::Quantum);
}

TEST_CASE("mountain elements have an edge along (k-1, k)") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 2; k <= n; ++k) CHECK(edge_by_length(mountain(k, n), {k - 1, k}).has_value());
}

TEST_CASE("adjacent descent is a quantum edge") {
  // w(1) > w(2) with nothing between
  const SignedPerm w = SignedPerm::parse("[2,1,3]");
  CHECK(edge_by_pattern(w, {1, 2}) == EdgeKind::Quantum);
  CHECK(edge_by_length(w, {1, 2}) == EdgeKind::Quantum);
}

TEST_CASE("n = 2 edge multiset from brute force over all pairs") {
  long count = 0;
  for (const auto& w : enumerate_group(2))
    for (const auto& a : positive_roots(2)) {
      const int ls = length(w), lt = length(w * reflection(a, 2));
      const int ht = pairing(rho(2), coroot_eps(a, 2));
      if (lt == ls + 1 || lt == ls - 2 * ht + 1) ++count;
    }
  CHECK(static_cast<long>(build_graph(2).size()) == count);
}

TEST_CASE("cross-check totals and serial agreement") {
  for (int n = 1; n <= 4; ++n) {
    const CrossCheck c = cross_check(n);
    const CrossCheck s = cross_check_serial(n);
    CHECK(c.disagreements == 0);
    CHECK(c.bruhat + c.quantum + c.none == c.pairs);
    CHECK(c.bruhat == s.bruhat);
    CHECK(c.quantum == s.quantum);
    CHECK(static_cast<long>(build_graph(n).size()) == c.bruhat + c.quantum);
  }
  const CrossCheck c4 = cross_check(4);
  CHECK(c4.pairs == 6144);
}

TEST_CASE("graph table agrees with the free functions") {
  const Qbg g(3);
  for (const auto& w : g.vertices())
    for (const auto& a : g.roots()) CHECK(g.edge(w, a) == edge_by_length(w, a));
}

TEST_CASE("exports") {
  const auto edges = build_graph(2);
  const Json j = export_json(2, edges);
  CHECK(j["vertices"].size() == 8);
  CHECK(j["edges"].size() == edges.size());
  for (const auto& ed : j["edges"]) {
    CHECK(ed.contains("src"));
    CHECK(ed.contains("root"));
    CHECK(ed.contains("dst"));
    CHECK(ed.contains("kind"));
  }
  const std::string dot = export_dot(2, edges);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(export_dot(2, build_graph_serial(2)) == dot);
}
