#include "qkc/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace qkc {

int order_pos(int x, int n) { return x > 0 ? x : 2 * n + 1 + x; }

bool letter_less(int a, int b, int n) { return order_pos(a, n) < order_pos(b, n); }

std::vector<int> letters(int n) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k) out.push_back(k);
  for (int k = n; k >= 1; --k) out.push_back(-k);
  return out;
}

std::vector<int> letters_between(int a, int b, int n) {
  std::vector<int> out;
  for (int x : letters(n))
    if (letter_less(a, x, n) && letter_less(x, b, n)) out.push_back(x);
  return out;
}

Exponents eps(int x, int n) { return unit_vector(n, std::abs(x), x > 0 ? 1 : -1); }

// ---- SignedPerm

SignedPerm::SignedPerm(std::vector<int> window) : w_(std::move(window)) {
  const int n = rank();
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int x : w_) {
    int a = std::abs(x);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) throw ConfigError("not a signed permutation: " + str());
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::parse(const std::string& text) {
  std::vector<int> w;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw ConfigError("bad window entry: " + tok);
      w.push_back(v);
    } catch (const std::logic_error&) {
      throw ConfigError("bad window entry: " + tok);
    }
    tok.clear();
  };
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == ',' || std::isspace(static_cast<unsigned char>(ch))) flush();
    else tok += ch;
  }
  flush();
  if (w.empty()) throw ConfigError("empty window: " + text);
  return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  std::vector<int> r(w_.size());
  for (int k = 1; k <= rank(); ++k) r[static_cast<std::size_t>(k - 1)] = (*this)(o(k));
  SignedPerm p;
  p.w_ = std::move(r);
  return p;
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> r(w_.size());
  for (int k = 1; k <= rank(); ++k) {
    int t = w_[static_cast<std::size_t>(k - 1)];
    r[static_cast<std::size_t>(std::abs(t) - 1)] = t > 0 ? k : -k;
  }
  SignedPerm p;
  p.w_ = std::move(r);
  return p;
}

Exponents SignedPerm::act_weight(const Exponents& lambda) const {
  Exponents out = zeros(rank());
  for (int k = 1; k <= rank(); ++k) {
    int t = w_[static_cast<std::size_t>(k - 1)];
    out[static_cast<std::size_t>(std::abs(t) - 1)] += t > 0 ? lambda[static_cast<std::size_t>(k - 1)]
                                                             : -lambda[static_cast<std::size_t>(k - 1)];
  }
  return out;
}

bool SignedPerm::is_identity() const {
  for (int k = 1; k <= rank(); ++k)
    if (w_[static_cast<std::size_t>(k - 1)] != k) return false;
  return true;
}

std::string SignedPerm::str() const { return exp_str(w_); }

// ---- roots

std::string RootC::str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<RootC> positive_roots(int n) {
  std::vector<RootC> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
    for (int j = i + 1; j <= n; ++j) out.push_back({i, -j});
    out.push_back({i, -i});
  }
  return out;
}

bool is_positive_root(const RootC& r, int n) {
  if (r.i < 1 || r.i > n || r.j == 0 || std::abs(r.j) > n) return false;
  if (r.j > 0) return r.i < r.j;
  return -r.j >= r.i;
}

Exponents root_weight(const RootC& r, int n) {
  Exponents v = unit_vector(n, r.i);
  return sub_exp(v, eps(r.j, n));
}

Exponents coroot_eps(const RootC& r, int n) {
  Exponents v = root_weight(r, n);
  if (r.is_long())
    for (auto& x : v) x /= 2;
  return v;
}

Exponents eps_to_alpha(const Exponents& v) {
  Exponents c(v.size());
  int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = (s += v[i]);
  return c;
}

Exponents alpha_to_eps(const Exponents& c) {
  Exponents v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i] - (i ? c[i - 1] : 0);
  return v;
}

Exponents coroot_alpha(const RootC& r, int n) { return eps_to_alpha(coroot_eps(r, n)); }

int eps_pair_alpha(int j, const Exponents& xi) {
  return xi[static_cast<std::size_t>(j - 1)] - (j > 1 ? xi[static_cast<std::size_t>(j - 2)] : 0);
}

int pairing(const Exponents& lambda, const Exponents& coroot_in_eps) { return dot(lambda, coroot_in_eps); }

Exponents simple_root(int i, int n) {
  if (i < n) return root_weight({i, i + 1}, n);
  return root_weight({n, -n}, n);
}

Exponents simple_coroot_eps(int i, int n) {
  if (i < n) return coroot_eps({i, i + 1}, n);
  return coroot_eps({n, -n}, n);
}

int cartan(int i, int j, int n) { return pairing(simple_root(i, n), simple_coroot_eps(j, n)); }

bool is_positive_vector(const Exponents& v) {
  for (int x : v)
    if (x) return x > 0;
  return false;
}

Exponents rho(int n) {
  Exponents s = zeros(n);
  for (const auto& r : positive_roots(n)) s = add_exp(s, root_weight(r, n));
  for (auto& x : s) x /= 2;
  return s;
}

SignedPerm reflection(const RootC& r, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    int y = x;
    if (x == r.i) y = r.j;
    else if (x == r.j) y = r.i;
    else if (x == -r.i) y = -r.j;
    else if (x == -r.j) y = -r.i;
    w[static_cast<std::size_t>(x - 1)] = y;
  }
  return SignedPerm(std::move(w));
}

SignedPerm simple_reflection(int i, int n) {
  if (i < 1 || i > n) throw ConfigError("simple reflection index out of range");
  return reflection(i < n ? RootC{i, i + 1} : RootC{n, -n}, n);
}

SignedPerm word(const std::vector<int>& simple_indices, int n) {
  SignedPerm w = SignedPerm::identity(n);
  for (int i : simple_indices) w = w * simple_reflection(i, n);
  return w;
}

int length(const SignedPerm& w) {
  const int n = w.rank();
  int l = 0;
  for (const auto& r : positive_roots(n))
    if (!is_positive_vector(w.act_weight(root_weight(r, n)))) ++l;
  return l;
}

SignedPerm longest_element(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) w[static_cast<std::size_t>(k - 1)] = -k;
  return SignedPerm(std::move(w));
}

SignedPerm mountain(int k, int n) {
  if (k < 1 || k > n) throw ConfigError("mountain index out of range");
  std::vector<int> ws;
  for (int i = 1; i <= n; ++i) ws.push_back(i);
  for (int i = n - 1; i >= k; --i) ws.push_back(i);
  return word(ws, n);
}

SignedPerm prefix(int k, int n) {
  if (k < 0 || k > n) throw ConfigError("prefix index out of range");
  std::vector<int> ws;
  for (int i = 1; i <= k; ++i) ws.push_back(i);
  return word(ws, n);
}

std::vector<SignedPerm> enumerate_group(int n) {
  if (n < 1 || n > 6) throw ConfigError("rank must be between 1 and 6 for group enumeration");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<SignedPerm> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> w(p);
      for (int i = 0; i < n; ++i)
        if (mask >> (n - 1 - i) & 1) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t group_index(const SignedPerm& w) {
  const int n = w.rank();
  std::size_t rank = 0;
  std::vector<int> abs_vals;
  int mask = 0;
  for (int i = 0; i < n; ++i) {
    int t = w.window()[static_cast<std::size_t>(i)];
    abs_vals.push_back(std::abs(t));
    if (t < 0) mask |= 1 << (n - 1 - i);
  }
  // Lehmer code
  std::vector<std::size_t> fact(static_cast<std::size_t>(n + 1), 1);
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::size_t>(i);
  for (int i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (abs_vals[static_cast<std::size_t>(j)] < abs_vals[static_cast<std::size_t>(i)]) ++smaller;
    rank += smaller * fact[static_cast<std::size_t>(n - 1 - i)];
  }
  return rank * (std::size_t{1} << n) + static_cast<std::size_t>(mask);
}

// ---- Demazure

GroupRingElement demazure(int i, const GroupRingElement& f) {
  const int n = f.rank();
  if (i < 1 || i > n) throw ConfigError("Demazure index out of range");
  const Exponents a = simple_root(i, n);
  const Exponents cv = simple_coroot_eps(i, n);
  GroupRingElement r(n);
  for (const auto& [nu, c] : f.terms()) {
    const int m = pairing(nu, cv);
    if (m <= 0) {
      for (int t = 0; t <= -m; ++t) r.add_term(add_exp(nu, scale_exp(a, t)), c);
    } else if (m >= 2) {
      for (int t = 1; t <= m - 1; ++t) r.add_term(sub_exp(nu, scale_exp(a, t)), -c);
    }
  }
  return r;
}

GroupRingElement demazure_fraction(int i, const GroupRingElement& f) {
  const int n = f.rank();
  if (i < 1 || i > n) throw ConfigError("Demazure index out of range");
  const Exponents a = simple_root(i, n);
  const Exponents cv = simple_coroot_eps(i, n);
  GroupRingElement num(n);
  for (const auto& [nu, c] : f.terms()) {
    Exponents s_nu = sub_exp(nu, scale_exp(a, pairing(nu, cv)));
    num.add_term(nu, c);
    num.add_term(add_exp(a, s_nu), -c);
  }
  GroupRingElement den = GroupRingElement::constant(n, 1) - GroupRingElement::monomial(a, 1);
  return exact_div(num, den);
}

}  // namespace qkc
