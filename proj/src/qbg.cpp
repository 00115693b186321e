#include "qkc/qbg.hpp"

#include <algorithm>
#include <sstream>

namespace qkc {

std::string kind_str(EdgeKind k) { return k == EdgeKind::Bruhat ? "B" : "Q"; }

namespace {

std::optional<EdgeKind> classify(int lw, int ly, const RootC& a, int n) {
  if (ly == lw + 1) return EdgeKind::Bruhat;
  if (ly == lw - 2 * pairing(rho(n), coroot_eps(a, n)) + 1) return EdgeKind::Quantum;
  return std::nullopt;
}

}  // namespace

std::optional<EdgeKind> edge_by_length(const SignedPerm& w, const RootC& a) {
  const int n = w.rank();
  return classify(length(w), length(w * reflection(a, n)), a, n);
}

std::optional<EdgeKind> edge_by_pattern(const SignedPerm& w, const RootC& a) {
  const int n = w.rank();
  auto P = [n](int x) { return order_pos(x, n); };
  const int wi = w(a.i);
  const int wj = w(a.j);
  const std::vector<int> mid = letters_between(a.i, a.j, n);
  auto some_between = [&] {
    return std::any_of(mid.begin(), mid.end(), [&](int k) { return P(wi) < P(w(k)) && P(w(k)) < P(wj); });
  };
  if (a.j > 0 || a.is_long()) {
    if (P(wi) < P(wj) && !some_between()) return EdgeKind::Bruhat;
    if (P(wi) > P(wj) &&
        std::all_of(mid.begin(), mid.end(), [&](int k) { return P(wi) > P(w(k)) && P(w(k)) > P(wj); }))
      return EdgeKind::Quantum;
    return std::nullopt;
  }
  if (P(wi) < P(wj) && (wi > 0) == (wj > 0) && !some_between()) return EdgeKind::Bruhat;
  return std::nullopt;
}

Qbg::Qbg(int n) : n_(n), vertices_(enumerate_group(n)), roots_(positive_roots(n)) {
  const long nv = static_cast<long>(vertices_.size());
  const long nr = static_cast<long>(roots_.size());
  lengths_.assign(vertices_.size(), 0);
  table_.assign(vertices_.size() * roots_.size(), -1);
#pragma omp parallel for schedule(static)
  for (long v = 0; v < nv; ++v) lengths_[static_cast<std::size_t>(v)] = length(vertices_[static_cast<std::size_t>(v)]);
  std::vector<SignedPerm> refl;
  for (const auto& a : roots_) refl.push_back(reflection(a, n));
#pragma omp parallel for schedule(dynamic, 16)
  for (long v = 0; v < nv; ++v) {
    const auto& w = vertices_[static_cast<std::size_t>(v)];
    for (long r = 0; r < nr; ++r) {
      const std::size_t y = group_index(w * refl[static_cast<std::size_t>(r)]);
      auto k = classify(lengths_[static_cast<std::size_t>(v)], lengths_[y], roots_[static_cast<std::size_t>(r)], n);
      if (k) table_[static_cast<std::size_t>(v * nr + r)] = *k == EdgeKind::Bruhat ? 0 : 1;
    }
  }
}

int Qbg::root_index(const RootC& a) const {
  auto it = std::find(roots_.begin(), roots_.end(), a);
  if (it == roots_.end()) throw ConfigError("not a positive root: " + a.str());
  return static_cast<int>(it - roots_.begin());
}

std::optional<EdgeKind> Qbg::edge(const SignedPerm& w, const RootC& a) const {
  if (w.rank() != n_) throw ConfigError("rank mismatch in graph lookup");
  const signed char k = table_[group_index(w) * roots_.size() + static_cast<std::size_t>(root_index(a))];
  if (k < 0) return std::nullopt;
  return k == 0 ? EdgeKind::Bruhat : EdgeKind::Quantum;
}

int Qbg::vertex_length(const SignedPerm& w) const { return lengths_[group_index(w)]; }

namespace {

std::vector<QbgEdge> edges_at(const SignedPerm& w, const std::vector<RootC>& roots, int n) {
  std::vector<QbgEdge> out;
  for (const auto& a : roots) {
    auto k = edge_by_length(w, a);
    if (k) out.push_back({w, a, w * reflection(a, n), *k});
  }
  return out;
}

}  // namespace

std::vector<QbgEdge> build_graph(int n) {
  const auto verts = enumerate_group(n);
  const auto roots = positive_roots(n);
  std::vector<std::vector<QbgEdge>> per(verts.size());
  const long nv = static_cast<long>(verts.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long v = 0; v < nv; ++v) per[static_cast<std::size_t>(v)] = edges_at(verts[static_cast<std::size_t>(v)], roots, n);
  std::vector<QbgEdge> out;
  for (auto& p : per) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<QbgEdge> build_graph_serial(int n) {
  const auto roots = positive_roots(n);
  std::vector<QbgEdge> out;
  for (const auto& w : enumerate_group(n)) {
    auto p = edges_at(w, roots, n);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

namespace {

struct Tally {
  long bruhat = 0, quantum = 0, none = 0, bad = 0;
  std::string first;
};

Tally check_vertex(const SignedPerm& w, const std::vector<RootC>& roots) {
  Tally t;
  for (const auto& a : roots) {
    auto l = edge_by_length(w, a);
    auto p = edge_by_pattern(w, a);
    if (!l) ++t.none;
    else if (*l == EdgeKind::Bruhat) ++t.bruhat;
    else ++t.quantum;
    if (l != p) {
      if (t.bad == 0) t.first = w.str() + " " + a.str();
      ++t.bad;
    }
  }
  return t;
}

CrossCheck merge(int n, const std::vector<Tally>& ts, long pairs) {
  CrossCheck c;
  c.n = n;
  c.pairs = pairs;
  for (const auto& t : ts) {
    c.bruhat += t.bruhat;
    c.quantum += t.quantum;
    c.none += t.none;
    if (t.bad && c.first_mismatch.empty()) c.first_mismatch = t.first;
    c.disagreements += t.bad;
  }
  return c;
}

}  // namespace

CrossCheck cross_check(int n) {
  const auto verts = enumerate_group(n);
  const auto roots = positive_roots(n);
  std::vector<Tally> ts(verts.size());
  const long nv = static_cast<long>(verts.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long v = 0; v < nv; ++v) ts[static_cast<std::size_t>(v)] = check_vertex(verts[static_cast<std::size_t>(v)], roots);
  return merge(n, ts, static_cast<long>(verts.size() * roots.size()));
}

CrossCheck cross_check_serial(int n) {
  const auto verts = enumerate_group(n);
  const auto roots = positive_roots(n);
  std::vector<Tally> ts;
  for (const auto& w : verts) ts.push_back(check_vertex(w, roots));
  return merge(n, ts, static_cast<long>(verts.size() * roots.size()));
}

std::string export_dot(int n, const std::vector<QbgEdge>& edges) {
  std::ostringstream os;
  os << "digraph QBG_C" << n << " {\n";
  for (const auto& w : enumerate_group(n)) os << "  \"" << w.str() << "\";\n";
  for (const auto& e : edges)
    os << "  \"" << e.source.str() << "\" -> \"" << e.target.str() << "\" [label=\"" << e.root.str() << " "
       << kind_str(e.kind) << "\"" << (e.kind == EdgeKind::Quantum ? ", style=dashed" : "") << "];\n";
  os << "}\n";
  return os.str();
}

Json export_json(int n, const std::vector<QbgEdge>& edges) {
  Json v = Json::array();
  for (const auto& w : enumerate_group(n)) v.push_back(w.str());
  Json es = Json::array();
  for (const auto& e : edges)
    es.push_back(Json{{"src", e.source.str()}, {"root", e.root.str()}, {"dst", e.target.str()}, {"kind", kind_str(e.kind)}});
  return Json{{"n", n}, {"vertices", v}, {"edges", es}};
}

std::vector<CheckRecord> check_qbg(int n) {
  std::vector<CheckRecord> out;
  const std::string tag = " n=" + std::to_string(n);
  out.push_back(run_check("pattern criterion = length criterion, all (w, a)" + tag, [&]() -> std::optional<std::string> {
    const CrossCheck c = cross_check(n);
    long group = 1;
    for (int i = 1; i <= n; ++i) group *= 2 * i;
    if (c.pairs != group * n * n) return "pair count " + std::to_string(c.pairs);
    if (c.disagreements) return std::to_string(c.disagreements) + " disagreements, first " + c.first_mismatch;
    return std::nullopt;
  }));
  out.push_back(run_check("rho = sum (n-i+1) eps_i" + tag, [&]() -> std::optional<std::string> {
    Exponents want = zeros(n);
    for (int i = 1; i <= n; ++i) want[static_cast<std::size_t>(i - 1)] = n - i + 1;
    if (rho(n) == want) return std::nullopt;
    return "rho = " + exp_str(rho(n));
  }));
  out.push_back(run_check("one Bruhat edge per simple pair {w, w s_i}" + tag, [&]() -> std::optional<std::string> {
    for (const auto& w : enumerate_group(n))
      for (int i = 1; i <= n; ++i) {
        const RootC a = i < n ? RootC{i, i + 1} : RootC{n, -n};
        const SignedPerm y = w * simple_reflection(i, n);
        const int b = (edge_by_length(w, a) == EdgeKind::Bruhat) + (edge_by_length(y, a) == EdgeKind::Bruhat);
        if (b != 1) return "w=" + w.str() + " i=" + std::to_string(i);
      }
    return std::nullopt;
  }));
  out.push_back(run_check("edge lengths and serial build agree" + tag, [&]() -> std::optional<std::string> {
    const auto par = build_graph(n);
    const auto ser = build_graph_serial(n);
    if (par.size() != ser.size()) return std::string("edge count differs from serial build");
    for (std::size_t e = 0; e < par.size(); ++e) {
      const QbgEdge& x = par[e];
      if (x.source != ser[e].source || x.root != ser[e].root || x.kind != ser[e].kind) return "edge " + std::to_string(e) + " out of order";
      const int ls = length(x.source), lt = length(x.target);
      const int want = x.kind == EdgeKind::Bruhat ? ls + 1 : ls - 2 * pairing(rho(n), coroot_eps(x.root, n)) + 1;
      if (lt != want) return "length at " + x.source.str() + " -> " + x.target.str();
    }
    if (n == 1 && par.size() != 2) return "C_1 has " + std::to_string(par.size()) + " edges";
    return std::nullopt;
  }));
  return out;
}

}  // namespace qkc
