#include "qkc/alcove.hpp"

#include <cstdlib>
#include <set>

namespace qkc {

std::string SignedRoot::str() const { return (negative ? "-" : "") + root.str(); }

RootSequence theta_seq(int k, int n) {
  if (k < 1 || k > n) throw ConfigError("sequence index out of range");
  RootSequence s;
  for (int i = 1; i < k; ++i) s.push_back({{i, k}, true});
  return s;
}

RootSequence gamma_seq(int k, int n) {
  if (k < 1 || k > n) throw ConfigError("sequence index out of range");
  RootSequence s;
  for (int i = 1; i < k; ++i) s.push_back({{i, -k}, true});
  for (int j = k + 1; j <= n; ++j) s.push_back({{k, -j}, true});
  s.push_back({{k, -k}, true});
  for (int j = n; j > k; --j) s.push_back({{k, j}, true});
  return s;
}

RootSequence sequence_for(int x, int n) { return x > 0 ? theta_seq(x, n) : gamma_seq(-x, n); }

RootSequence parse_sequence(const std::string& spec, int n) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("sequence must look like theta:K or gamma:K");
  const std::string kind = spec.substr(0, colon);
  int k = 0;
  try {
    k = std::stoi(spec.substr(colon + 1));
  } catch (const std::logic_error&) {
    throw ConfigError("bad sequence index in " + spec);
  }
  if (kind == "theta") return theta_seq(k, n);
  if (kind == "gamma") return gamma_seq(k, n);
  throw ConfigError("unknown sequence kind " + kind);
}

std::string sequence_str(const RootSequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].str();
  return out + ")";
}

std::string AdmissibleSubset::label(const RootSequence& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < positions.size(); ++i)
    out += (i ? ", " : "") + s[static_cast<std::size_t>(positions[i])].str();
  return out + "}";
}

Json AdmissibleSubset::to_json(const RootSequence& s) const {
  Json roots = Json::array();
  for (int p : positions) roots.push_back(s[static_cast<std::size_t>(p)].str());
  Json ks = Json::array();
  for (auto k : kinds) ks.push_back(kind_str(k));
  Json pos = Json::array();
  for (int p : positions) pos.push_back(p + 1);
  return Json{{"positions", pos}, {"roots", roots}, {"kinds", ks}, {"end", end.str()}, {"down", down}};
}

namespace {

void extend(const Qbg& g, const RootSequence& s, std::size_t start, AdmissibleSubset& cur,
            std::vector<AdmissibleSubset>& out) {
  out.push_back(cur);
  const int n = g.rank();
  for (std::size_t p = start; p < s.size(); ++p) {
    const RootC& a = s[p].root;  // |gamma| is the positive root
    auto k = g.edge(cur.end, a);
    if (!k) continue;
    AdmissibleSubset next = cur;
    next.positions.push_back(static_cast<int>(p));
    next.end = cur.end * reflection(a, n);
    next.path.push_back(next.end);
    next.kinds.push_back(*k);
    if (*k == EdgeKind::Quantum) next.down = add_exp(cur.down, coroot_alpha(a, n));
    extend(g, s, p + 1, next, out);
  }
}

}  // namespace

std::vector<AdmissibleSubset> admissible_subsets(const Qbg& g, const SignedPerm& w, const RootSequence& s) {
  AdmissibleSubset root;
  root.path = {w};
  root.end = w;
  root.down = zeros(g.rank());
  std::vector<AdmissibleSubset> out;
  extend(g, s, 0, root, out);
  return out;
}

std::vector<std::vector<AdmissibleSubset>> admissible_for_all(const Qbg& g, const RootSequence& s) {
  const auto& verts = g.vertices();
  std::vector<std::vector<AdmissibleSubset>> out(verts.size());
  const long nv = static_cast<long>(verts.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long v = 0; v < nv; ++v) out[static_cast<std::size_t>(v)] = admissible_subsets(g, verts[static_cast<std::size_t>(v)], s);
  return out;
}

std::vector<std::vector<int>> s_chains(int m, int j, int n) {
  if (!letter_less(j, m, n)) throw ConfigError("chain endpoints must satisfy j < m");
  std::vector<int> mid = letters_between(j, m, n);
  // decreasing
  std::vector<int> desc(mid.rbegin(), mid.rend());
  std::vector<std::vector<int>> out;
  const std::size_t d = desc.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<int> c;
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> i & 1) c.push_back(desc[i]);
    c.push_back(j);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<AdmissibleSubset> a_filtered(const Qbg& g, const SignedPerm& w, int source, int l) {
  const int n = g.rank();
  const Exponents target = eps(l, n);
  const Exponents moved = w.act_weight(eps(source, n));
  std::vector<AdmissibleSubset> out;
  for (auto& a : admissible_subsets(g, w, sequence_for(source, n))) {
    if (a.positions.empty()) continue;
    if (a.end.inverse().act_weight(moved) == target) out.push_back(std::move(a));
  }
  return out;
}

namespace {

struct Listed {
  std::vector<RootC> roots;
  SignedPerm end;
  Exponents down;
};

// alpha_a^vee + ... + alpha_b^vee in the alpha^vee basis
Exponents run(int a, int b, int n) {
  Exponents v = zeros(n);
  for (int i = a; i <= b; ++i) v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

std::optional<std::string> compare_listing(const Qbg& g, const SignedPerm& w, const RootSequence& s,
                                           const std::vector<Listed>& want) {
  const auto got = admissible_subsets(g, w, s);
  if (got.size() != want.size())
    return "w=" + w.str() + " " + sequence_str(s) + ": " + std::to_string(got.size()) + " subsets, expected " +
           std::to_string(want.size());
  for (const auto& l : want) {
    bool found = false;
    for (const auto& a : got) {
      std::vector<RootC> rs;
      for (int p : a.positions) rs.push_back(s[static_cast<std::size_t>(p)].root);
      if (rs == l.roots) {
        found = true;
        if (a.end != l.end) return "w=" + w.str() + " " + a.label(s) + ": end " + a.end.str() + ", expected " + l.end.str();
        if (a.down != l.down) return "w=" + w.str() + " " + a.label(s) + ": down " + exp_str(a.down);
      }
    }
    if (!found) return "w=" + w.str() + ": a listed subset is not admissible";
  }
  return std::nullopt;
}

}  // namespace

std::vector<CheckRecord> check_listings(int n) {
  const Qbg g(n);
  const Exponents Z = zeros(n);
  std::vector<CheckRecord> out;
  const std::string tag = " n=" + std::to_string(n);
  out.push_back(run_check("A(s_1..s_n..s_k, Theta_k) = {empty, {-(k-1,k)}}" + tag, [&]() -> std::optional<std::string> {
    for (int k = 1; k <= n; ++k) {
      std::vector<Listed> want{{{}, mountain(k, n), Z}};
      if (k > 1) want.push_back({{{k - 1, k}}, mountain(k - 1, n), Z});
      if (auto d = compare_listing(g, mountain(k, n), theta_seq(k, n), want)) return d;
    }
    return std::nullopt;
  }));
  out.push_back(run_check("A(s_1..s_n..s_k, Gamma_k(k)) four-element listing" + tag, [&]() -> std::optional<std::string> {
    for (int k = 1; k <= n; ++k) {
      std::vector<Listed> want{{{}, mountain(k, n), Z}, {{{k, -k}}, prefix(k - 1, n), run(k, n, n)}};
      if (k < n) {
        want.push_back({{{k, k + 1}}, mountain(k + 1, n), run(k, k, n)});
        want.push_back({{{k, -k}, {k, k + 1}}, prefix(k, n), run(k, n, n)});
      }
      if (auto d = compare_listing(g, mountain(k, n), gamma_seq(k, n), want)) return d;
    }
    return std::nullopt;
  }));
  out.push_back(run_check("A(s_1..s_i, Theta_{i+1}) = {empty, {-(i,i+1)}}" + tag, [&]() -> std::optional<std::string> {
    for (int i = 1; i < n; ++i) {
      const std::vector<Listed> want{{{}, prefix(i, n), Z}, {{{i, i + 1}}, prefix(i - 1, n), run(i, i, n)}};
      if (auto d = compare_listing(g, prefix(i, n), theta_seq(i + 1, n), want)) return d;
    }
    return std::nullopt;
  }));
  out.push_back(run_check("A(s_1..s_{j-1}, Gamma_j(j)) = {empty, {-(j,j+1)}}" + tag, [&]() -> std::optional<std::string> {
    for (int j = 1; j < n; ++j) {
      const std::vector<Listed> want{{{}, prefix(j - 1, n), Z}, {{{j, j + 1}}, prefix(j, n), Z}};
      if (auto d = compare_listing(g, prefix(j - 1, n), gamma_seq(j, n), want)) return d;
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckRecord> check_alcove_invariants(int n) {
  const Qbg g(n);
  std::vector<CheckRecord> out;
  const std::string tag = " n=" + std::to_string(n);
  std::vector<RootSequence> seqs;
  for (int k = 1; k <= n; ++k) {
    seqs.push_back(theta_seq(k, n));
    seqs.push_back(gamma_seq(k, n));
  }
  out.push_back(run_check("walks re-validate, down nonnegative, prefix closed" + tag, [&]() -> std::optional<std::string> {
    for (const auto& s : seqs) {
      const auto all = admissible_for_all(g, s);
      for (const auto& subsets : all) {
        std::set<std::vector<int>> seen;
        for (const auto& a : subsets) seen.insert(a.positions);
        for (const auto& a : subsets) {
          const std::string at = "w=" + a.path.front().str() + " " + a.label(s);
          Exponents down = zeros(n);
          for (std::size_t i = 0; i < a.size(); ++i) {
            const RootC& r = s[static_cast<std::size_t>(a.positions[i])].root;
            const auto k = edge_by_length(a.path[i], r);
            if (!k || *k != a.kinds[i] || a.path[i + 1] != a.path[i] * reflection(r, n)) return "bad step in " + at;
            if (*k == EdgeKind::Quantum) down = add_exp(down, eps_to_alpha(coroot_eps(r, n)));
          }
          if (down != a.down) return "down mismatch in " + at;
          if (std::any_of(down.begin(), down.end(), [](int x) { return x < 0; })) return "negative down in " + at;
          if (a.end != a.path.back()) return "end mismatch in " + at;
          if (!a.positions.empty()) {
            auto p = a.positions;
            p.pop_back();
            if (!seen.count(p)) return "prefix not admissible in " + at;
          }
        }
      }
    }
    return std::nullopt;
  }));
  out.push_back(run_check("|S_{m,j}| = 2^{d-1}" + tag, [&]() -> std::optional<std::string> {
    const auto ls = letters(n);
    for (std::size_t a = 0; a < ls.size(); ++a)
      for (std::size_t b = a + 1; b < ls.size(); ++b) {
        const std::size_t d = b - a;
        if (s_chains(ls[b], ls[a], n).size() != (std::size_t{1} << (d - 1)))
          return "m=" + std::to_string(ls[b]) + " j=" + std::to_string(ls[a]);
      }
    return std::nullopt;
  }));
  out.push_back(run_check("filtered families = filter over the full enumeration" + tag, [&]() -> std::optional<std::string> {
    for (const auto& w : g.vertices())
      for (int src : letters(n))
        for (int l : letters(n)) {
          std::vector<std::vector<int>> want;
          const RootSequence s = sequence_for(src, n);
          for (const auto& a : admissible_subsets(g, w, s)) {
            if (a.positions.empty()) continue;
            // end^{-1} w eps_src = s_{r_k} .. s_{r_1} eps_src
            Exponents v = eps(src, n);
            for (int p : a.positions) v = reflection(s[static_cast<std::size_t>(p)].root, n).act_weight(v);
            if (v == eps(l, n)) want.push_back(a.positions);
          }
          std::vector<std::vector<int>> got;
          for (const auto& a : a_filtered(g, w, src, l)) got.push_back(a.positions);
          if (got != want) return "w=" + w.str() + " src=" + std::to_string(src) + " l=" + std::to_string(l);
        }
    return std::nullopt;
  }));
  return out;
}

}  // namespace qkc
