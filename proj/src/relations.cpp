#include "qkc/relations.hpp"

#include "qkc/semimod.hpp"
#include "qkc/weyl.hpp"

#include <functional>
#include <sstream>

namespace qkc {

namespace {

GroupRingElement mono(const Exponents& e, const Int& c = 1) { return GroupRingElement::monomial(e, c); }
GroupRingElement one(int n) { return GroupRingElement::constant(n, 1); }

Exponents ev(int n, std::initializer_list<std::pair<int, int>> parts) {
  Exponents v = zeros(n);
  for (auto [i, s] : parts) v[static_cast<std::size_t>(i - 1)] += s;
  return v;
}

// 1 + e^d + ... + e^{(N-1)d}
GroupRingElement geo(const Exponents& d, int N) {
  GroupRingElement r(static_cast<int>(d.size()));
  for (int t = 0; t < N; ++t) r.add_term(scale_exp(d, t), 1);
  return r;
}

Int sgn(int l) { return l % 2 ? -1 : 1; }

}  // namespace

RelationVector RelationVector::shifted(const Exponents& mu) const {
  RelationVector r(n);
  for (std::size_t l = 0; l < c.size(); ++l) r.c[l] = c[l].shifted(mu);
  return r;
}

GroupRingElement RelationVector::apply(const std::vector<GroupRingElement>& X) const {
  GroupRingElement r(n);
  for (std::size_t l = 0; l < c.size() && l < X.size(); ++l) r += c[l] * X[l];
  return r;
}

std::string RelationVector::str() const {
  std::ostringstream os;
  for (std::size_t l = 0; l < c.size(); ++l) os << "X_" << l << ": " << (c[l].is_zero() ? "0" : c[l].str()) << "\n";
  return os.str();
}

Json RelationVector::to_json() const {
  Json arr = Json::array();
  for (const auto& x : c) arr.push_back(x.to_json());
  return Json{{"n", n}, {"coefficients", arr}};
}

std::optional<std::string> first_difference(const RelationVector& a, const RelationVector& b) {
  if (a.c.size() != b.c.size()) return std::string("length mismatch");
  for (std::size_t l = 0; l < a.c.size(); ++l)
    if (!(a.c[l] == b.c[l])) return "coefficient of X_" + std::to_string(l) + ": " + a.c[l].str() + " vs " + b.c[l].str();
  return std::nullopt;
}

RelationVector base_relation(int n) {
  if (n < 1) throw ConfigError("n must be at least 1");
  RelationVector r(n);
  for (int l = 0; l < n; ++l)
    r.c[static_cast<std::size_t>(l)] = (mono(unit_vector(n, 1, -(n - l))) + mono(unit_vector(n, 1, n - l))).scaled(sgn(l));
  r.c[static_cast<std::size_t>(n)] = GroupRingElement::constant(n, sgn(n));
  return r;
}

RelationVector relation_step(const RelationVector& rel, int i) {
  const int n = rel.n;
  if (i < 1 || i >= n) throw ConfigError("derivation step index must lie in 1..n-1");
  const Exponents ei = eps(i, n);
  const GroupRingElement div = mono(ei) * (one(n) - mono(ev(n, {{i, 1}, {i + 1, 1}})));
  RelationVector r(n);
  for (std::size_t l = 0; l < rel.c.size(); ++l) {
    const GroupRingElement d = demazure(i, rel.c[l].shifted(ei));
    r.c[l] = d.is_zero() ? GroupRingElement(n) : exact_div(d, div);
  }
  return r;
}

RelationVector derive_secondary(const RelationVector& base) { return relation_step(base, 1); }

RelationVector secondary_literal(int n) {
  RelationVector r(n);
  for (int l = 0; l < n; ++l)
    r.c[static_cast<std::size_t>(l)] = (mono(unit_vector(n, 1, -(n - l))) * geo(ev(n, {{1, 1}, {2, -1}}), n - l) *
                                        geo(ev(n, {{1, 1}, {2, 1}}), n - l))
                                           .scaled(sgn(l));
  return r;
}

RelationVector system_arbitrary(int k, int n) {
  if (k < 2 || k > n - 1) throw ConfigError("system index must lie in 2..n-1");
  RelationVector out(n);
  const Exponents dm = ev(n, {{k, 1}, {k + 1, -1}});
  const Exponents dp = ev(n, {{k, 1}, {k + 1, 1}});
  for (int l = 0; l <= n - k; ++l) {
    GroupRingElement tot(n);
    std::function<void(int, int, Exponents)> rec = [&](int level, int prev_r, Exponents e) {
      if (level == k) {
        tot += mono(e) * geo(dm, prev_r) * geo(dp, prev_r);
        return;
      }
      const int lo = k - level;
      const int hi = level == 1 ? n - l - 1 : prev_r - 1;
      for (int r = lo; r <= hi; ++r)
        for (int s = 0; s <= hi - r; ++s) {
          Exponents f = e;
          if (level == 1) f[0] += l + r + 2 * s;
          else f[static_cast<std::size_t>(level - 1)] += -prev_r + r + 2 * s;
          if (level == k - 1) f[static_cast<std::size_t>(k - 1)] += -r;
          rec(level + 1, r, f);
        }
    };
    rec(1, 0, zeros(n));
    out.c[static_cast<std::size_t>(l)] = tot.scaled(sgn(l));
  }
  return out;
}

RelationVector induction_step(const RelationVector& prev, int k) {
  if (k == 2) return relation_step(prev.shifted(unit_vector(prev.n, 1, prev.n)), 2);
  return relation_step(prev, k);
}

std::vector<RelationVector> derivation_chain(int n) {
  std::vector<RelationVector> out{base_relation(n)};
  if (n >= 2) out.push_back(derive_secondary(out.back()));
  for (int k = 2; k <= n - 1; ++k) out.push_back(induction_step(out.back(), k));
  return out;
}

std::vector<Exponents> paired_vars_range(int a, int b, int n) {
  std::vector<Exponents> v;
  for (int i = a; i <= b; ++i) v.push_back(eps(i, n));
  for (int i = b; i >= a; --i) v.push_back(eps(-i, n));
  return v;
}

std::vector<Exponents> paired_vars(int k, int n) { return paired_vars_range(1, k, n); }

GroupRingElement complete_h(int m, const std::vector<Exponents>& vars, int n) {
  if (m < 0) return GroupRingElement(n);
  std::vector<GroupRingElement> H(static_cast<std::size_t>(m + 1), GroupRingElement(n));
  H[0] = one(n);
  for (const auto& x : vars)
    for (int d = 1; d <= m; ++d) H[static_cast<std::size_t>(d)] += H[static_cast<std::size_t>(d - 1)].shifted(x);
  return H[static_cast<std::size_t>(m)];
}

GroupRingElement elementary_e(int m, const std::vector<Exponents>& vars, int n) {
  if (m < 0 || m > static_cast<int>(vars.size())) return GroupRingElement(n);
  std::vector<GroupRingElement> E(static_cast<std::size_t>(m + 1), GroupRingElement(n));
  E[0] = one(n);
  for (const auto& x : vars)
    for (int d = m; d >= 1; --d) E[static_cast<std::size_t>(d)] += E[static_cast<std::size_t>(d - 1)].shifted(x);
  return E[static_cast<std::size_t>(m)];
}

GroupRingElement complete_H(int l, int k, int n) { return complete_h(l, paired_vars(k, n), n); }
GroupRingElement elementary_E(int l, int n) { return elementary_e(l, paired_vars(n, n), n); }

RelationVector hform(int k, int n) {
  if (k < 0 || k > n - 1) throw ConfigError("system index must lie in 0..n-1");
  RelationVector r(n);
  for (int l = 0; l <= n - k; ++l)
    r.c[static_cast<std::size_t>(l)] =
        (complete_H(n - l - k, k + 1, n) - complete_H(n - l - k - 2, k + 1, n)).scaled(sgn(l));
  return r;
}

std::vector<RelationVector> assemble_system(int n) {
  std::vector<RelationVector> out;
  for (int k = 0; k <= n - 1; ++k) out.push_back(hform(k, n));
  return out;
}

Exponents system_prefactor(int k, int n) {
  Exponents v = unit_vector(n, 1, -(n - 1));
  for (int i = 2; i <= k; ++i) v[static_cast<std::size_t>(i - 1)] += 1;
  return v;
}

Exponents alt_prefactor(int k, int n) {
  Exponents v = unit_vector(n, 1, -(2 * n - k - 2));
  for (int i = 2; i <= n - 1; ++i) v[static_cast<std::size_t>(i - 1)] += 1;
  return v;
}

std::vector<RelationVector> derived_system(int n) {
  const auto chain = derivation_chain(n);
  std::vector<RelationVector> out{chain[0]};
  if (n >= 2) out.push_back(chain[1].shifted(unit_vector(n, 1)));
  for (int k = 2; k <= n - 1; ++k) out.push_back(chain[static_cast<std::size_t>(k)].shifted(system_prefactor(k, n)));
  return out;
}

std::vector<GroupRingElement> solve_system(const std::vector<RelationVector>& sys) {
  const int n = static_cast<int>(sys.size());
  std::vector<GroupRingElement> X(static_cast<std::size_t>(n + 1), GroupRingElement(n));
  X[0] = one(n);
  for (int k = n - 1; k >= 0; --k) {
    const auto& rel = sys[static_cast<std::size_t>(k)];
    const int idx = n - k;
    for (int l = idx + 1; l <= n; ++l)
      if (!rel.c[static_cast<std::size_t>(l)].is_zero())
        throw ConfigError("relation " + std::to_string(k) + " involves X_" + std::to_string(l) + " beyond its leading term");
    const GroupRingElement& lead = rel.c[static_cast<std::size_t>(idx)];
    if (lead.size() != 1 || (lead.terms().begin()->second != 1 && lead.terms().begin()->second != -1))
      throw DivisibilityError("leading coefficient of relation " + std::to_string(k) + " is not a unit: " + lead.str());
    const auto& [mu, s] = *lead.terms().begin();
    GroupRingElement acc(n);
    for (int l = 0; l < idx; ++l) acc += rel.c[static_cast<std::size_t>(l)] * X[static_cast<std::size_t>(l)];
    X[static_cast<std::size_t>(idx)] = acc.shifted(neg_exp(mu)).scaled(-s);
  }
  return X;
}

std::vector<GroupRingElement> solve_system(int n) { return solve_system(assemble_system(n)); }

TSeries t_mul(const TSeries& a, const TSeries& b, int dt) {
  const int n = a.empty() ? 0 : a[0].rank();
  TSeries r(static_cast<std::size_t>(dt + 1), GroupRingElement(n));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= dt; ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += a[i] * b[j];
  return r;
}

namespace {

TSeries t_const(int n, int dt) {
  TSeries r(static_cast<std::size_t>(dt + 1), GroupRingElement(n));
  r[0] = one(n);
  return r;
}

// 1/(1 - e^x t)
TSeries t_geometric(const Exponents& x, int dt) {
  const int n = static_cast<int>(x.size());
  TSeries r(static_cast<std::size_t>(dt + 1), GroupRingElement(n));
  for (int d = 0; d <= dt; ++d) r[static_cast<std::size_t>(d)] = mono(scale_exp(x, d));
  return r;
}

// 1 + e^x t
TSeries t_linear(const Exponents& x, int dt) {
  TSeries r = t_const(static_cast<int>(x.size()), dt);
  if (dt >= 1) r[1] = mono(x);
  return r;
}

TSeries one_minus_t2(int n, int dt) {
  TSeries r = t_const(n, dt);
  if (dt >= 2) r[2] = GroupRingElement::constant(n, -1);
  return r;
}

TSeries t_negate(TSeries a) {
  for (std::size_t d = 1; d < a.size(); d += 2) a[d] = -a[d];
  return a;
}

std::optional<std::string> t_diff(const TSeries& a, const TSeries& b) {
  for (std::size_t d = 0; d < std::max(a.size(), b.size()); ++d) {
    const GroupRingElement x = d < a.size() ? a[d] : GroupRingElement();
    const GroupRingElement y = d < b.size() ? b[d] : GroupRingElement();
    if (!((x - y).is_zero())) return "t^" + std::to_string(d) + ": " + x.str() + " vs " + y.str();
  }
  return std::nullopt;
}

}  // namespace

std::vector<CheckRecord> check_generating_identities(int n, int dt) {
  std::vector<CheckRecord> out;
  const std::string tag = " n=" + std::to_string(n) + " Dt=" + std::to_string(dt);
  TSeries gf2_lhs(static_cast<std::size_t>(dt + 1), GroupRingElement(n));
  for (int l = 0; l <= std::min(2 * n, dt); ++l) gf2_lhs[static_cast<std::size_t>(l)] = elementary_E(l, n);
  TSeries gf2_rhs = t_const(n, dt);
  for (const auto& x : paired_vars(n, n)) gf2_rhs = t_mul(gf2_rhs, t_linear(x, dt), dt);
  out.push_back(run_check("elementary generating function" + tag, [&]() { return t_diff(gf2_lhs, gf2_rhs); }));

  for (int k = 0; k <= n - 1; ++k) {
    const std::string kt = " k=" + std::to_string(k) + tag;
    TSeries prod = t_const(n, dt);
    for (const auto& x : paired_vars(k + 1, n)) prod = t_mul(prod, t_geometric(x, dt), dt);
    TSeries gf0(static_cast<std::size_t>(dt + 1), GroupRingElement(n)), gf1 = gf0;
    for (int l = 0; l <= dt; ++l) {
      gf0[static_cast<std::size_t>(l)] = complete_H(l, k + 1, n);
      gf1[static_cast<std::size_t>(l)] = complete_H(l, k + 1, n) - complete_H(l - 2, k + 1, n);
    }
    out.push_back(run_check("complete generating function" + kt, [&]() { return t_diff(gf0, prod); }));
    const TSeries gf1_rhs = t_mul(one_minus_t2(n, dt), prod, dt);
    out.push_back(run_check("(1-t^2) complete generating function" + kt, [&]() { return t_diff(gf1, gf1_rhs); }));
    const TSeries lhs3 = t_mul(t_negate(gf1), gf2_lhs, dt);
    TSeries rhs3 = one_minus_t2(n, dt);
    for (const auto& x : paired_vars_range(k + 2, n, n)) rhs3 = t_mul(rhs3, t_linear(x, dt), dt);
    out.push_back(run_check("product generating function" + kt, [&]() -> std::optional<std::string> {
      if (auto d = t_diff(lhs3, rhs3)) return d;
      for (int d = 2 * (n - k - 1) + 3; d <= dt; ++d)
        if (!rhs3[static_cast<std::size_t>(d)].is_zero()) return "right side has a t^" + std::to_string(d) + " term";
      return std::nullopt;
    }));
    out.push_back(run_check("t^{n-k} coefficient vanishes" + kt, [&]() -> std::optional<std::string> {
      if (n - k > dt) return "t-degree too small";
      const auto& c = lhs3[static_cast<std::size_t>(n - k)];
      if (!c.is_zero()) return "coefficient " + c.str();
      const auto rest = paired_vars_range(k + 2, n, n);
      const GroupRingElement e_diff = elementary_e(n - k, rest, n) - elementary_e(n - k - 2, rest, n);
      if (!e_diff.is_zero()) return "e_{n-k} - e_{n-k-2} of the remaining variables is " + e_diff.str();
      return std::nullopt;
    }));
  }
  return out;
}

std::vector<CheckRecord> check_base_relation(int n, int cap) {
  std::vector<CheckRecord> out;
  const std::string tag = " n=" + std::to_string(n);
  const RelationVector base = base_relation(n);
  out.push_back(run_check("base relation = folded alternating sum" + tag, [&]() {
    // sum_{l<=2n} (-1)^l e^{l eps_1} X_l with X_{2n-k} -> X_k, times e^{-n eps_1}
    RelationVector folded(n);
    for (int l = 0; l <= 2 * n; ++l) {
      const int slot = l <= n ? l : 2 * n - l;
      folded.c[static_cast<std::size_t>(slot)] += mono(unit_vector(n, 1, l), sgn(l));
    }
    return first_difference(folded.shifted(unit_vector(n, 1, -n)), base);
  }));
  out.push_back(run_check("base relation lifts to the full alternating module sum" + tag, [&]() {
    SemiModElement lhs(n, cap);
    for (int l = 0; l <= n; ++l)
      lhs += ff(n, l, FRange::full(), cap).scaled(QExtElement(base.c[static_cast<std::size_t>(l)].shifted(unit_vector(n, 1, n))));
    return first_difference(lhs, closed_Q(n, 0, cap));
  }));
  return out;
}

std::vector<CheckRecord> check_derivation(int n) {
  std::vector<CheckRecord> out;
  const std::string tag = " n=" + std::to_string(n);
  if (n < 2) return out;
  const auto chain = derivation_chain(n);
  out.push_back(run_check("D_1 step on base = secondary relation" + tag,
                          [&]() { return first_difference(chain[1], secondary_literal(n)); }));
  out.push_back(run_check("X_n drops out of the secondary relation" + tag, [&]() -> std::optional<std::string> {
    if (chain[1].c[static_cast<std::size_t>(n)].is_zero()) return std::nullopt;
    return chain[1].c[static_cast<std::size_t>(n)].str();
  }));
  for (int k = 2; k <= n - 1; ++k) {
    const std::string kt = " k=" + std::to_string(k) + tag;
    out.push_back(run_check("Demazure chain = nested sum" + kt, [&]() {
      return first_difference(chain[static_cast<std::size_t>(k)], system_arbitrary(k, n));
    }));
    out.push_back(run_check("one step from the literal previous relation" + kt, [&]() {
      const RelationVector prev = k == 2 ? secondary_literal(n) : system_arbitrary(k - 1, n);
      return first_difference(induction_step(prev, k), system_arbitrary(k, n));
    }));
  }
  return out;
}

std::vector<CheckRecord> check_system(int n) {
  std::vector<CheckRecord> out;
  const std::string tag = " n=" + std::to_string(n);
  const auto sys = assemble_system(n);
  std::vector<GroupRingElement> E;
  for (int l = 0; l <= n; ++l) E.push_back(elementary_E(l, n));
  const auto derived = derived_system(n);
  for (int k = 0; k <= n - 1; ++k)
    out.push_back(run_check("derived relation = H-form k=" + std::to_string(k) + tag, [&]() {
      return first_difference(derived[static_cast<std::size_t>(k)], sys[static_cast<std::size_t>(k)]);
    }));
  out.push_back(run_check("E annihilated by every relation" + tag, [&]() -> std::optional<std::string> {
    for (int k = 0; k <= n - 1; ++k) {
      const GroupRingElement v = sys[static_cast<std::size_t>(k)].apply(E);
      if (!v.is_zero()) return "relation k=" + std::to_string(k) + " leaves " + v.str();
    }
    return std::nullopt;
  }));
  std::vector<GroupRingElement> X;
  out.push_back(run_check("solution = elementary symmetric" + tag, [&]() -> std::optional<std::string> {
    X = solve_system(sys);
    for (int l = 0; l <= n; ++l)
      if (!(X[static_cast<std::size_t>(l)] == E[static_cast<std::size_t>(l)]))
        return "X_" + std::to_string(l) + " = " + X[static_cast<std::size_t>(l)].str();
    return std::nullopt;
  }));
  out.push_back(run_check("solution independent of assembly path" + tag, [&]() -> std::optional<std::string> {
    const auto Y = solve_system(derived);
    for (int l = 0; l <= n; ++l)
      if (!(Y[static_cast<std::size_t>(l)] == E[static_cast<std::size_t>(l)])) return "X_" + std::to_string(l);
    return std::nullopt;
  }));
  return out;
}

GroupRingElement csym_nested_sum(int N, int m, bool last_plus_one) {
  if (N < 3) throw ConfigError("nested identity needs at least three variables");
  GroupRingElement tot(N);
  const Exponents dm = ev(N, {{N - 1, 1}, {N, -1}});
  const Exponents dp = ev(N, {{N - 1, 1}, {N, 1}});
  std::function<void(int, int, Exponents)> rec = [&](int level, int prev_r, Exponents e) {
    if (level == N - 1) {
      tot += mono(e) * geo(dm, prev_r) * geo(dp, prev_r);
      return;
    }
    const int lo = N - 1 - level;
    const int hi = level == 1 ? m + N - 2 : prev_r - 1;
    for (int r = lo; r <= hi; ++r)
      for (int s = 0; s <= hi - r; ++s) {
        Exponents f = e;
        if (level == 1) f[0] += -(m + N - 2) + r + 2 * s;
        else f[static_cast<std::size_t>(level - 1)] += -prev_r + r + 2 * s + 1;
        if (level == N - 2) f[static_cast<std::size_t>(N - 2)] += -r + (last_plus_one ? 1 : 0);
        rec(level + 1, r, f);
      }
  };
  rec(1, 0, zeros(N));
  return tot;
}

std::vector<CheckRecord> check_csym_props(int n, int max_m) {
  std::vector<CheckRecord> out;
  const std::string tag = " n=" + std::to_string(n);
  auto hdiff = [](int m, int N) {
    const auto v = paired_vars(N, N);
    return complete_h(m, v, N) - complete_h(m - 2, v, N);
  };
  out.push_back(run_check("h_0 = 1" + tag, [&]() -> std::optional<std::string> {
    for (int N = 1; N <= n; ++N)
      if (!(complete_h(0, paired_vars(N, N), N) == one(N))) return "N=" + std::to_string(N);
    return std::nullopt;
  }));
  out.push_back(run_check("x^m + x^-m = h_m - h_{m-2}" + tag, [&]() -> std::optional<std::string> {
    for (int m = 1; m <= max_m; ++m)
      if (!(mono({m}) + mono({-m}) == hdiff(m, 1))) return "m=" + std::to_string(m);
    return std::nullopt;
  }));
  if (n >= 2)
    out.push_back(run_check("two-variable product identity" + tag, [&]() -> std::optional<std::string> {
      for (int m = 1; m <= max_m; ++m) {
        const GroupRingElement lhs = mono({-m, 0}) * geo({1, -1}, m + 1) * geo({1, 1}, m + 1);
        if (!(lhs == hdiff(m, 2))) return "m=" + std::to_string(m);
      }
      return std::nullopt;
    }));
  for (int N = 3; N <= n; ++N)
    out.push_back(run_check("nested sum identity N=" + std::to_string(N) + tag, [&]() -> std::optional<std::string> {
      for (int m = 1; m <= max_m; ++m)
        if (!(csym_nested_sum(N, m, true) == hdiff(m, N))) return "m=" + std::to_string(m);
      return std::nullopt;
    }));
  out.push_back(run_check("E_{n+l} = E_{n-l}" + tag, [&]() -> std::optional<std::string> {
    for (int l = 1; l <= n; ++l)
      if (!(elementary_E(n + l, n) == elementary_E(n - l, n))) return "l=" + std::to_string(l);
    return std::nullopt;
  }));
  out.push_back(run_check("E_0 = 1" + tag, [&]() -> std::optional<std::string> {
    if (elementary_E(0, n) == one(n)) return std::nullopt;
    return std::string("E_0 != 1");
  }));
  return out;
}

}  // namespace qkc
