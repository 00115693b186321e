#include "qkc/semimod.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qkc {

namespace {

int letter_at(int pos, int n) { return pos <= n ? pos : pos - 2 * n - 1; }

NovikovSeries one_series(int n, int cap) { return NovikovSeries::scalar(n, n, cap, 1); }

NovikovSeries t_mono(int n, int cap, const Exponents& x, const Int& c = 1) {
  return NovikovSeries::monomial(n, n, cap, x, c);
}

// letter after j <= n, with n+1 read as nbar
int next_letter(int j, int n) { return j < n ? j + 1 : -n; }

}  // namespace

// ---- LetterSet

LetterSet LetterSet::of(int n, const std::vector<int>& xs) {
  LetterSet s(n);
  for (int x : xs) s.insert(x);
  return s;
}

bool LetterSet::contains(int x) const {
  if (x == 0 || std::abs(x) > n_) return false;
  return mask_ >> (order_pos(x, n_) - 1) & 1u;
}

void LetterSet::insert(int x) {
  if (x == 0 || std::abs(x) > n_) throw ConfigError("letter out of range: " + std::to_string(x));
  mask_ |= 1u << (order_pos(x, n_) - 1);
}

void LetterSet::erase(int x) {
  if (x == 0 || std::abs(x) > n_) return;
  mask_ &= ~(1u << (order_pos(x, n_) - 1));
}

int LetterSet::size() const { return std::popcount(mask_); }

std::vector<int> LetterSet::members() const {
  std::vector<int> out;
  for (int p = 1; p <= 2 * n_; ++p)
    if (mask_ >> (p - 1) & 1u) out.push_back(letter_at(p, n_));
  return out;
}

Exponents LetterSet::eps_sum() const {
  Exponents v = zeros(n_);
  for (int x : members()) v = add_exp(v, eps(x, n_));
  return v;
}

std::string LetterSet::str() const {
  std::string out = "{";
  bool first = true;
  for (int x : members()) {
    out += (first ? "" : ",") + (x > 0 ? std::to_string(x) : std::to_string(-x) + "b");
    first = false;
  }
  return out + "}";
}

bool consecutive(const LetterSet& I, int a) {
  const int n = I.rank();
  if (!I.contains(a) || !I.contains(-a)) return false;
  for (int x : letters_between(a, -a, n))
    if (I.contains(x)) return false;
  return true;
}

// ---- BasisKey / SemiModElement

std::string BasisKey::str() const { return "(" + w.str() + ", " + exp_str(lambda) + ")"; }

SemiModElement::SemiModElement(int n, int degree_cap) : n_(n), cap_(degree_cap) {}

SemiModElement SemiModElement::basis(const SignedPerm& w, const Exponents& lambda, int degree_cap) {
  SemiModElement r(w.rank(), degree_cap);
  r.add_term({w, lambda}, one_series(w.rank(), degree_cap));
  return r;
}

NovikovSeries SemiModElement::coeff(const BasisKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? NovikovSeries(n_, n_, cap_) : it->second;
}

void SemiModElement::add_term(const BasisKey& k, const NovikovSeries& c) {
  if (k.w.rank() != n_ || static_cast<int>(k.lambda.size()) != n_) throw ConfigError("basis key rank mismatch");
  if (c.is_zero()) return;
  NovikovSeries cc = c.degree_cap() == cap_ ? c : c.with_cap(cap_);
  accumulate(terms_, k, cc);
}

void SemiModElement::adopt_shape(const SemiModElement& o) {
  if (n_ == o.n_ && cap_ == o.cap_) return;
  if (n_ == 0 && terms_.empty()) {
    n_ = o.n_;
    cap_ = o.cap_;
    return;
  }
  if (o.n_ == 0 && o.terms_.empty()) return;
  throw ConfigError("module element shape mismatch (rank or truncation degree)");
}

SemiModElement& SemiModElement::operator+=(const SemiModElement& o) {
  adopt_shape(o);
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

SemiModElement& SemiModElement::operator-=(const SemiModElement& o) {
  adopt_shape(o);
  for (const auto& [k, c] : o.terms_) subtract_into(terms_, k, c);
  return *this;
}

SemiModElement SemiModElement::operator-() const {
  SemiModElement r(n_, cap_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

bool SemiModElement::operator==(const SemiModElement& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  return n_ == o.n_ && cap_ == o.cap_ && terms_ == o.terms_;
}

SemiModElement SemiModElement::tensor(const Exponents& mu) const {
  SemiModElement r(n_, cap_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(BasisKey{k.w, add_exp(k.lambda, mu)}, c);
  return r;
}

SemiModElement SemiModElement::t_shift(const Exponents& xi) const {
  SemiModElement r(n_, cap_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.shifted(xi));
  return r;
}

SemiModElement SemiModElement::scaled(const NovikovSeries& s) const {
  SemiModElement r(n_, cap_);
  const NovikovSeries sc = s.degree_cap() == cap_ ? s : s.with_cap(cap_);
  for (const auto& [k, c] : terms_) r.add_term(k, c * sc);
  return r;
}

SemiModElement SemiModElement::scaled(const QExtElement& s) const {
  SemiModElement r(n_, cap_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.scaled(s));
  return r;
}

SemiModElement SemiModElement::scaled_e(const Exponents& mu, const Int& c) const {
  return scaled(QExtElement::monomial(0, mu, c));
}

std::string SemiModElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (const auto& [k, c] : terms_) os << k.w.str() << "  " << exp_str(k.lambda) << "  " << c.str("T") << "\n";
  return os.str();
}

Json SemiModElement::to_json() const {
  Json arr = Json::array();
  for (const auto& [k, c] : terms_)
    arr.push_back(Json{{"w", k.w.str()}, {"lambda", k.lambda}, {"coeff", c.to_json("T")}});
  return arr;
}

std::optional<std::string> first_difference(const SemiModElement& a, const SemiModElement& b) {
  SemiModElement d = a - b;
  if (d.is_zero()) return std::nullopt;
  const auto& [k, c] = *d.terms().begin();
  const auto& [x, q] = *c.terms().begin();
  return "at " + k.str() + " T^" + exp_str(x) + ": lhs " + a.coeff(k).coeff(x).str() + " vs rhs " +
         b.coeff(k).coeff(x).str();
}

Exponents t_run(int a, int b, int n) {
  Exponents v = zeros(n);
  for (int i = std::max(a, 1); i <= std::min(b, n); ++i) v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

// ---- coefficient factors

NovikovSeries psi(const LetterSet& I, int x, int cap) {
  const int n = I.rank();
  const NovikovSeries one = one_series(n, cap);
  if (x > 0) {
    const int j = x;
    if (!I.contains(j) && I.contains(next_letter(j, n))) return one - t_mono(n, cap, unit_vector(n, j));
    return one;
  }
  const int j = -x;
  if (j == 1) return one;
  if (consecutive(I, j - 1))
    return one - t_mono(n, cap, unit_vector(n, j - 1)) + t_mono(n, cap, t_run(j - 1, n, n));
  if (!I.contains(-j) && I.contains(-(j - 1))) return one - t_mono(n, cap, unit_vector(n, j - 1));
  return one;
}

NovikovSeries psi_product(const LetterSet& I, int cap) {
  NovikovSeries r = one_series(I.rank(), cap);
  for (int x : letters(I.rank())) r *= psi(I, x, cap);
  return r;
}

SeriesFraction phi_sinf(const LetterSet& I, int x) {
  const int n = I.rank();
  const SeriesFraction one = SeriesFraction::one(n, n);
  if (x > 0) {
    const int j = x;
    if (I.contains(j) && I.contains(next_letter(j, n))) return SeriesFraction::inverse_one_minus(n, n, j);
    return one;
  }
  const int j = -x;
  if (j == 1) return one;
  if (consecutive(I, j - 1))
    return one + SeriesFraction::polynomial(t_mono(n, kExact, t_run(j - 1, n, n))) *
                     SeriesFraction::inverse_one_minus(n, n, j - 1);
  if (I.contains(-j) && I.contains(-(j - 1))) return SeriesFraction::inverse_one_minus(n, n, j - 1);
  return one;
}

SeriesFraction theta_sinf(const LetterSet& I, int x) {
  const int n = I.rank();
  auto om = [n](int j) { return SeriesFraction::polynomial(one_minus(n, n, kExact, j)); };
  if (x > 0) {
    const int j = x;
    if (I.contains(next_letter(j, n))) return om(j);
    return SeriesFraction::one(n, n);
  }
  const int j = -x;
  if (j >= 2 && I.contains(-(j - 1))) return om(j - 1);
  return SeriesFraction::one(n, n);
}

// ---- F sums

int FRange::length(int n) const {
  switch (kind) {
    case RangeKind::Full: return 2 * n;
    case RangeKind::Upper:
      if (k < 0 || k > n) throw ConfigError("upper range index out of range");
      return k;
    case RangeKind::Barred:
      if (k < 0 || k > n) throw ConfigError("barred range index out of range");
      return 2 * n - k;
  }
  return 0;
}

std::string FRange::str() const {
  switch (kind) {
    case RangeKind::Full: return "full";
    case RangeKind::Upper: return "upper(" + std::to_string(k) + ")";
    case RangeKind::Barred: return "barred(" + std::to_string(k) + ")";
  }
  return "?";
}

std::vector<LetterSet> subsets_in_range(int n, int l, const FRange& r) {
  const int L = r.length(n);
  std::vector<LetterSet> out;
  if (l < 0 || l > L) return out;
  for (unsigned m = 0; m < (1u << L); ++m)
    if (std::popcount(m) == l) out.emplace_back(n, m);
  return out;
}

namespace {

SemiModElement ff_from(int n, const std::vector<LetterSet>& sets, const std::vector<NovikovSeries>& coeffs, int cap) {
  SemiModElement r(n, cap);
  for (std::size_t i = 0; i < sets.size(); ++i)
    r.add_term({SignedPerm::identity(n), neg_exp(sets[i].eps_sum())}, coeffs[i]);
  return r;
}

}  // namespace

SemiModElement ff(int n, int l, const FRange& r, int cap) {
  const auto sets = subsets_in_range(n, l, r);
  std::vector<NovikovSeries> coeffs(sets.size());
  const long ns = static_cast<long>(sets.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < ns; ++i) coeffs[static_cast<std::size_t>(i)] = psi_product(sets[static_cast<std::size_t>(i)], cap);
  return ff_from(n, sets, coeffs, cap);
}

SemiModElement ff_serial(int n, int l, const FRange& r, int cap) {
  const auto sets = subsets_in_range(n, l, r);
  std::vector<NovikovSeries> coeffs;
  for (const auto& I : sets) coeffs.push_back(psi_product(I, cap));
  return ff_from(n, sets, coeffs, cap);
}

SemiModElement closed_P(int n, int k, int cap) {
  SemiModElement r(n, cap);
  for (int l = 0; l <= k; ++l)
    r += ff(n, l, FRange::upper(k), cap).scaled_e(unit_vector(n, 1, l), l % 2 ? -1 : 1);
  return r;
}

SemiModElement closed_Q(int n, int k, int cap) {
  SemiModElement r(n, cap);
  const FRange rg = k == 0 ? FRange::full() : FRange::barred(k);
  for (int l = 0; l <= 2 * n - k; ++l) r += ff(n, l, rg, cap).scaled_e(unit_vector(n, 1, l), l % 2 ? -1 : 1);
  return r;
}

namespace {

Exponents ev(int n, std::initializer_list<std::pair<int, int>> parts) {
  Exponents v = zeros(n);
  for (auto [i, s] : parts) v[static_cast<std::size_t>(i - 1)] += s;
  return v;
}

}  // namespace

SemiModElement p_step_rhs(int n, int k, const std::vector<SemiModElement>& P) {
  const auto& Pk = P.at(static_cast<std::size_t>(k));
  SemiModElement r = Pk.tensor(ev(n, {{k + 1, -1}})).scaled_e(unit_vector(n, 1), -1);
  r += Pk;
  for (int j = 1; j <= k; ++j) {
    const Exponents mu = ev(n, {{j, 1}, {k + 1, -1}});
    const SemiModElement d = P[static_cast<std::size_t>(j - 1)] - P[static_cast<std::size_t>(j)];
    r += d.tensor(mu).t_shift(t_run(j, k, n));
  }
  return r;
}

SemiModElement q_step_rhs(int n, int k, const std::vector<SemiModElement>& P, const std::vector<SemiModElement>& Q) {
  const auto& Qk = Q.at(static_cast<std::size_t>(k));
  SemiModElement r = Qk.tensor(ev(n, {{k, 1}})).scaled_e(unit_vector(n, 1), -1);
  r += Qk;
  for (int j = k + 1; j <= n; ++j) {
    const SemiModElement d = Q[static_cast<std::size_t>(j)] - Q[static_cast<std::size_t>(j - 1)];
    r += d.tensor(ev(n, {{k, 1}, {j, -1}})).t_shift(t_run(k, j - 1, n));
  }
  for (int j = 1; j <= k; ++j) {
    const SemiModElement d = P[static_cast<std::size_t>(j - 1)] - P[static_cast<std::size_t>(j)];
    r += d.tensor(ev(n, {{j, 1}, {k, 1}})).t_shift(t_run(j, n, n));
  }
  return r;
}

std::vector<CheckRecord> check_recursion(int n, int cap) {
  std::vector<SemiModElement> P(static_cast<std::size_t>(n + 1)), Q(static_cast<std::size_t>(n + 1));
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k <= n; ++k) {
    P[static_cast<std::size_t>(k)] = closed_P(n, k, cap);
    Q[static_cast<std::size_t>(k)] = closed_Q(n, k, cap);
  }
  const std::string tag = "n=" + std::to_string(n) + (cap == kExact ? " exact" : " D=" + std::to_string(cap));
  std::vector<CheckRecord> out;
  out.push_back(run_check("P_0 = 1 " + tag, [&]() {
    return first_difference(P[0], SemiModElement::basis(SignedPerm::identity(n), zeros(n), cap));
  }));
  out.push_back(run_check("P_n = Q_n " + tag, [&]() { return first_difference(P.back(), Q.back()); }));
  std::vector<CheckRecord> rec(static_cast<std::size_t>(2 * n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < 2 * n; ++t) {
    if (t < n) {
      const int k = t;
      rec[static_cast<std::size_t>(t)] = run_check("P_{k+1} recurrence k=" + std::to_string(k) + " " + tag, [&]() {
        return first_difference(p_step_rhs(n, k, P), P[static_cast<std::size_t>(k + 1)]);
      });
    } else {
      const int k = t - n + 1;
      rec[static_cast<std::size_t>(t)] = run_check("Q_{k-1} recurrence k=" + std::to_string(k) + " " + tag, [&]() {
        return first_difference(q_step_rhs(n, k, P, Q), Q[static_cast<std::size_t>(k - 1)]);
      });
    }
  }
  append(out, rec);
  return out;
}

std::vector<CheckRecord> check_symmetry(int n, int cap) {
  std::vector<CheckRecord> out(static_cast<std::size_t>(n + 1));
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k <= n; ++k)
    out[static_cast<std::size_t>(k)] =
        run_check("F_" + std::to_string(k) + " = F_" + std::to_string(2 * n - k) + " n=" + std::to_string(n), [&]() {
          return first_difference(ff(n, k, FRange::full(), cap), ff(n, 2 * n - k, FRange::full(), cap));
        });
  return out;
}

// ---- duality

Decomposition decompose(const LetterSet& I) {
  Decomposition d;
  for (int i = 1; i <= I.rank(); ++i) {
    const bool u = I.contains(i), b = I.contains(-i);
    if (u && b) d.K.push_back(i);
    else if (u) d.A.push_back(i);
    else if (b) d.B.push_back(i);
  }
  return d;
}

LetterSet star_map(const LetterSet& I) {
  const int n = I.rank();
  LetterSet r(n);
  for (int i = 1; i <= n; ++i) {
    const bool u = I.contains(i), b = I.contains(-i);
    if (u && !b) r.insert(i);
    else if (b && !u) r.insert(-i);
    else if (!u && !b) {
      r.insert(i);
      r.insert(-i);
    }
  }
  return r;
}

std::vector<LetterSet> jab_sets(int n, const std::vector<int>& A, const std::vector<int>& B, int k) {
  LetterSet base(n);
  for (int a : A) base.insert(a);
  for (int b : B) {
    if (base.contains(b)) throw ConfigError("A and B must be disjoint");
    base.insert(-b);
  }
  std::vector<int> rest;
  for (int i = 1; i <= n; ++i)
    if (!base.contains(i) && !base.contains(-i)) rest.push_back(i);
  std::vector<LetterSet> out;
  for (unsigned m = 0; m < (1u << rest.size()); ++m) {
    LetterSet I = base;
    for (std::size_t t = 0; t < rest.size(); ++t)
      if (m >> t & 1u) {
        I.insert(rest[t]);
        I.insert(-rest[t]);
      }
    if (I.size() == k) out.push_back(I);
  }
  return out;
}

bool duality_hypothesis(const LetterSet& I) {
  const Decomposition d = decompose(I);
  const int kmax = d.K.empty() ? 0 : d.K.back();
  if (!d.A.empty() && kmax < d.A.back()) return true;
  if (!d.B.empty() && kmax < d.B.back()) return true;
  const int M = std::max(d.A.empty() ? 0 : d.A.back(), d.B.empty() ? 0 : d.B.back());
  for (int x = M + 1; x <= I.rank(); ++x)
    if (!I.contains(x)) return false;
  return true;
}

namespace {

std::vector<NovikovSeries> psi_table(int n, bool parallel) {
  const long N = 1L << (2 * n);
  std::vector<NovikovSeries> t(static_cast<std::size_t>(N));
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long m = 0; m < N; ++m) t[static_cast<std::size_t>(m)] = psi_product(LetterSet(n, static_cast<unsigned>(m)));
  } else {
    for (long m = 0; m < N; ++m) t[static_cast<std::size_t>(m)] = psi_product(LetterSet(n, static_cast<unsigned>(m)));
  }
  return t;
}

void note(DualityStats& s, const std::string& what) {
  if (s.first_failure.empty()) s.first_failure = what;
}

// all checks attached to one disjoint pair (A, B), encoded base-3 in code
DualityStats duality_for(int n, long code, const std::vector<NovikovSeries>& psi_of) {
  DualityStats s;
  std::vector<int> A, B, rest;
  long c = code;
  for (int i = 1; i <= n; ++i, c /= 3) {
    if (c % 3 == 1) A.push_back(i);
    else if (c % 3 == 2) B.push_back(i);
    else rest.push_back(i);
  }
  LetterSet base(n);
  for (int a : A) base.insert(a);
  for (int b : B) base.insert(-b);
  auto P = [&](const LetterSet& I) -> const NovikovSeries& { return psi_of[I.mask()]; };
  auto with_pairs = [](LetterSet I, const std::vector<int>& ks) {
    for (int x : ks) {
      I.insert(x);
      I.insert(-x);
    }
    return I;
  };
  const std::string ab = "A=" + LetterSet::of(n, A).str() + " B=" + LetterSet::of(n, B).str();

  std::vector<NovikovSeries> sums(static_cast<std::size_t>(2 * n + 1), NovikovSeries(n, n, kExact));
  for (unsigned m = 0; m < (1u << rest.size()); ++m) {
    std::vector<int> ks;
    for (std::size_t t = 0; t < rest.size(); ++t)
      if (m >> t & 1u) ks.push_back(rest[t]);
    const LetterSet I = with_pairs(base, ks);
    sums[static_cast<std::size_t>(I.size())] += P(I);
    const LetterSet Is = star_map(I);
    if (star_map(Is) != I) {
      ++s.involution_failures;
      note(s, "star not involutive at " + I.str());
    }
    if (duality_hypothesis(I)) {
      ++s.hypothesis_cases;
      if (P(I) != P(Is)) {
        ++s.hypothesis_failures;
        note(s, "duality identity fails at I=" + I.str());
      }
    }
  }
  const int ab_size = static_cast<int>(A.size() + B.size());
  for (int k = ab_size; k <= n; k += 2) {
    ++s.groups;
    if (sums[static_cast<std::size_t>(k)] != sums[static_cast<std::size_t>(2 * n - k)]) {
      ++s.group_failures;
      note(s, "duality sum " + ab + " k=" + std::to_string(k));
    }
  }

  // S(J, p) = T(J, p)
  int M = 0;
  for (int x : A) M = std::max(M, x);
  for (int x : B) M = std::max(M, x);
  std::vector<int> free, tail;
  for (int x : rest) (x <= M ? free : tail).push_back(x);
  for (unsigned fm = 0; fm < (1u << free.size()); ++fm) {
    std::vector<int> kc;
    for (std::size_t t = 0; t < free.size(); ++t)
      if (fm >> t & 1u) kc.push_back(free[t]);
    const LetterSet J = with_pairs(base, kc);
    for (int p = 1; p <= n - M - 1; ++p) {
      NovikovSeries S(n, n, kExact), T(n, n, kExact);
      for (unsigned tm = 0; tm < (1u << tail.size()); ++tm) {
        if (std::popcount(tm) != p) continue;
        std::vector<int> ks;
        for (std::size_t t = 0; t < tail.size(); ++t)
          if (tm >> t & 1u) ks.push_back(tail[t]);
        const LetterSet I = with_pairs(J, ks);
        S += P(I);
        T += P(star_map(I));
      }
      ++s.st_cases;
      if (S != T) {
        ++s.st_failures;
        note(s, "S != T at J=" + J.str() + " p=" + std::to_string(p));
      }
    }
  }
  return s;
}

void merge(DualityStats& into, const DualityStats& s) {
  into.groups += s.groups;
  into.hypothesis_cases += s.hypothesis_cases;
  into.st_cases += s.st_cases;
  into.group_failures += s.group_failures;
  into.hypothesis_failures += s.hypothesis_failures;
  into.st_failures += s.st_failures;
  into.involution_failures += s.involution_failures;
  if (into.first_failure.empty()) into.first_failure = s.first_failure;
}

long pow3(int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

}  // namespace

DualityStats duality_stats(int n) {
  const auto table = psi_table(n, true);
  const long N = pow3(n);
  std::vector<DualityStats> part(static_cast<std::size_t>(N));
#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < N; ++c) part[static_cast<std::size_t>(c)] = duality_for(n, c, table);
  DualityStats s;
  for (const auto& p : part) merge(s, p);
  return s;
}

DualityStats duality_stats_serial(int n) {
  const auto table = psi_table(n, false);
  DualityStats s;
  for (long c = 0; c < pow3(n); ++c) merge(s, duality_for(n, c, table));
  return s;
}

std::vector<CheckRecord> check_duality(int n) {
  const DualityStats s = duality_stats(n);
  const std::string tag = " n=" + std::to_string(n);
  auto rec = [&](const std::string& id, long cases, long bad) {
    return run_check(id + tag + " (" + std::to_string(cases) + " cases)", [&]() -> std::optional<std::string> {
      if (bad == 0) return std::nullopt;
      return std::to_string(bad) + " failures, first: " + s.first_failure;
    });
  };
  return {rec("star map is an involution", 1L << (2 * n), s.involution_failures),
          rec("duality identity", s.hypothesis_cases, s.hypothesis_failures),
          rec("duality sums over (A,B)", s.groups, s.group_failures),
          rec("S(J,p) = T(J,p)", s.st_cases, s.st_failures)};
}

std::vector<CheckRecord> check_factorization_sinf(int n) {
  return {run_check("phi*theta = psi n=" + std::to_string(n), [n]() -> std::optional<std::string> {
    const long N = 1L << (2 * n);
    std::vector<std::string> bad(static_cast<std::size_t>(N));
#pragma omp parallel for schedule(dynamic, 16)
    for (long m = 0; m < N; ++m) {
      const LetterSet I(n, static_cast<unsigned>(m));
      for (int x : letters(n)) {
        if (!(phi_sinf(I, x) * theta_sinf(I, x) == SeriesFraction::polynomial(psi(I, x)))) {
          bad[static_cast<std::size_t>(m)] = "I=" + I.str() + " x=" + std::to_string(x);
          break;
        }
      }
    }
    for (const auto& b : bad)
      if (!b.empty()) return b;
    return std::nullopt;
  })};
}

SemiModElement demazure_module(int i, const SemiModElement& z) {
  SemiModElement r(z.rank(), z.degree_cap());
  for (const auto& [k, c] : z.terms()) {
    if (!k.w.is_identity())
      throw UnsupportedOperand("Demazure operator on a non-translation class " + k.str());
    NovikovSeries d(c.nvars(), c.rank(), c.degree_cap());
    for (const auto& [x, q] : c.terms())
      d.add_term(x, q.map_group_part([i](const GroupRingElement& g) { return demazure(i, g); }));
    r.add_term(k, d);
  }
  return r;
}

}  // namespace qkc
