#include "qkc/qkpres.hpp"

#include "qkc/relations.hpp"

namespace qkc {

namespace {

int next_letter(int j, int n) { return j < n ? j + 1 : -n; }

SeriesFraction frac_one(int n) { return SeriesFraction::one(n, n); }
SeriesFraction frac_om(int n, int j) { return SeriesFraction::polynomial(one_minus(n, n, kExact, j)); }
SeriesFraction frac_inv(int n, int j) { return SeriesFraction::inverse_one_minus(n, n, j); }

SeriesFraction consec_case(int n, int j) {
  return frac_one(n) + SeriesFraction::polynomial(NovikovSeries::monomial(n, n, kExact, t_run(j - 1, n, n))) *
                           frac_inv(n, j - 1);
}

NovikovSeries unit_series(int n, int cap) { return NovikovSeries::scalar(n, n, cap, 1); }

}  // namespace

SeriesFraction zeta(const LetterSet& I, int x) {
  const int n = I.rank();
  if (x > 0) {
    if (I.contains(x) && !I.contains(next_letter(x, n))) return frac_om(n, x);
    return frac_one(n);
  }
  const int j = -x;
  if (j == 1) return frac_one(n);
  if (consecutive(I, j - 1)) return consec_case(n, j);
  if (I.contains(-j) && !I.contains(-(j - 1))) return frac_om(n, j - 1);
  return frac_one(n);
}

SeriesFraction eta(const LetterSet& I, int x) {
  const int n = I.rank();
  if (x > 0) return I.contains(x) ? frac_inv(n, x) : frac_one(n);
  const int j = -x;
  if (j >= 2 && I.contains(x)) return frac_inv(n, j - 1);
  return frac_one(n);
}

SeriesFraction phi_q(const LetterSet& I, int x) {
  const int n = I.rank();
  if (x > 0) {
    if (I.contains(x) && I.contains(next_letter(x, n))) return frac_inv(n, x);
    return frac_one(n);
  }
  const int j = -x;
  if (j == 1) return frac_one(n);
  if (consecutive(I, j - 1)) return consec_case(n, j);
  if (I.contains(-j) && I.contains(-(j - 1))) return frac_inv(n, j - 1);
  return frac_one(n);
}

SeriesFraction zeta_product(const LetterSet& I) {
  SeriesFraction r = frac_one(I.rank());
  for (int x : letters(I.rank())) r *= zeta(I, x);
  return r;
}

Json coefficient_table(const LetterSet& I) {
  Json rows = Json::array();
  for (int x : letters(I.rank()))
    rows.push_back(Json{{"letter", x > 0 ? std::to_string(x) : std::to_string(-x) + "b"},
                        {"zeta", zeta(I, x).str()},
                        {"eta", eta(I, x).str()},
                        {"phi", phi_q(I, x).str()}});
  return Json{{"I", I.str()}, {"rows", rows}};
}

Exponents z_exponent(const LetterSet& I) { return I.eps_sum(); }

namespace {

ZLaurentElement f_from(int n, const std::vector<LetterSet>& sets, const std::vector<NovikovSeries>& cs, int cap) {
  ZLaurentElement r(n, cap);
  for (std::size_t i = 0; i < sets.size(); ++i) r.add_term(z_exponent(sets[i]), cs[i]);
  return r;
}

void need_cap(int cap) {
  if (cap == kExact) throw ConfigError("the z-side polynomials need a finite Q-truncation degree");
}

}  // namespace

ZLaurentElement f_poly(int n, int l, const FRange& r, int cap) {
  need_cap(cap);
  const auto sets = subsets_in_range(n, l, r);
  std::vector<NovikovSeries> cs(sets.size());
  const long ns = static_cast<long>(sets.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < ns; ++i) cs[static_cast<std::size_t>(i)] = zeta_product(sets[static_cast<std::size_t>(i)]).expand(cap);
  return f_from(n, sets, cs, cap);
}

ZLaurentElement f_poly_serial(int n, int l, const FRange& r, int cap) {
  need_cap(cap);
  const auto sets = subsets_in_range(n, l, r);
  std::vector<NovikovSeries> cs;
  for (const auto& I : sets) cs.push_back(zeta_product(I).expand(cap));
  return f_from(n, sets, cs, cap);
}

ZLaurentElement e_poly_z(int n, int l, int cap) {
  // one z-variable at a time, same recursion as for E_l
  std::vector<ZLaurentElement> E(static_cast<std::size_t>(std::max(l, 0) + 1), ZLaurentElement(n, cap));
  if (l < 0 || l > 2 * n) return ZLaurentElement(n, cap);
  E[0] = ZLaurentElement::constant(unit_series(n, cap));
  for (const auto& x : paired_vars(n, n)) {
    const ZLaurentElement zx = ZLaurentElement::monomial(x, unit_series(n, cap));
    for (int d = l; d >= 1; --d) E[static_cast<std::size_t>(d)] += E[static_cast<std::size_t>(d - 1)] * zx;
  }
  return E[static_cast<std::size_t>(l)];
}

std::vector<ZLaurentElement> ideal_generators(int n, int cap) {
  std::vector<ZLaurentElement> out;
  for (int l = 1; l <= n; ++l) {
    ZLaurentElement g = f_poly(n, l, FRange::full(), cap);
    g -= ZLaurentElement::constant(NovikovSeries::constant(n, n, cap, QExtElement(elementary_E(l, n))));
    out.push_back(std::move(g));
  }
  return out;
}

ZLaurentElement schubert_poly(int n, int k, bool barred, int cap) {
  if (k < 1 || k > n) throw ConfigError("k must lie in 1..n");
  ZLaurentElement r(n, cap);
  const int top = barred ? 2 * n - k : k;
  const FRange rg = barred ? FRange::barred(k) : FRange::upper(k);
  for (int l = 0; l <= top; ++l) {
    const NovikovSeries c = NovikovSeries::constant(n, n, cap, QExtElement::monomial(0, unit_vector(n, 1, -l), l % 2 ? -1 : 1));
    r += f_poly(n, l, rg, cap).scaled(c);
  }
  return r;
}

SemiModElement to_semimod(const ZLaurentElement& p) {
  const int n = p.rank();
  const int cap = p.degree_cap();
  need_cap(cap);
  SemiModElement out(n, cap);
  for (const auto& [a, c] : p.terms()) {
    std::vector<int> den(static_cast<std::size_t>(n), 0);
    NovikovSeries num = unit_series(n, kExact);
    for (int j = 1; j <= n; ++j) {
      const int aj = a[static_cast<std::size_t>(j - 1)];
      if (aj == 0) continue;
      // (1 - T_{j-1})^{a_j} / (1 - T_j)^{a_j}, T_0 = 0
      const int up = aj > 0 ? j - 1 : j;
      const int dn = aj > 0 ? j : j - 1;
      const int e = std::abs(aj);
      if (up >= 1) num *= power(one_minus(n, n, kExact, up), e);
      if (dn >= 1) den[static_cast<std::size_t>(dn - 1)] += e;
    }
    const NovikovSeries factor = SeriesFraction(num, den).expand(cap);
    out.add_term({SignedPerm::identity(n), neg_exp(a)}, c.inverted_weights() * factor);
  }
  return out;
}

std::vector<CheckRecord> check_factorization_q(int n) {
  return {run_check("zeta*eta = phi n=" + std::to_string(n), [n]() -> std::optional<std::string> {
    const long N = 1L << (2 * n);
    std::vector<std::string> bad(static_cast<std::size_t>(N));
#pragma omp parallel for schedule(dynamic, 16)
    for (long m = 0; m < N; ++m) {
      const LetterSet I(n, static_cast<unsigned>(m));
      for (int x : letters(n))
        if (!(zeta(I, x) * eta(I, x) == phi_q(I, x))) {
          bad[static_cast<std::size_t>(m)] = "I=" + I.str() + " x=" + std::to_string(x);
          break;
        }
    }
    for (const auto& b : bad)
      if (!b.empty()) return b;
    return std::nullopt;
  })};
}

std::vector<CheckRecord> check_dictionary(int n, int cap) {
  std::vector<CheckRecord> out;
  const std::string tag = " n=" + std::to_string(n) + " D=" + std::to_string(cap);
  // dictionary comparisons always expand at a finite degree
  const int D = cap == kExact ? 2 * n + 2 : cap;
  out.push_back(run_check("F_l maps to the module sum, all l" + tag, [&]() -> std::optional<std::string> {
    for (int l = 0; l <= 2 * n; ++l)
      if (auto d = first_difference(to_semimod(f_poly(n, l, FRange::full(), D)), ff(n, l, FRange::full(), D)))
        return "l=" + std::to_string(l) + " " + *d;
    return std::nullopt;
  }));
  out.push_back(run_check("F_l^k maps to the upper module sum" + tag, [&]() -> std::optional<std::string> {
    for (int k = 1; k <= n; ++k)
      for (int l = 0; l <= k; ++l)
        if (auto d = first_difference(to_semimod(f_poly(n, l, FRange::upper(k), D)), ff(n, l, FRange::upper(k), D)))
          return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " " + *d;
    return std::nullopt;
  }));
  out.push_back(run_check("F_l^kbar maps to the barred module sum" + tag, [&]() -> std::optional<std::string> {
    for (int k = 1; k <= n; ++k)
      for (int l = 0; l <= 2 * n - k; ++l)
        if (auto d = first_difference(to_semimod(f_poly(n, l, FRange::barred(k), D)), ff(n, l, FRange::barred(k), D)))
          return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " " + *d;
    return std::nullopt;
  }));
  out.push_back(run_check("Schubert polynomials map to the closed forms" + tag, [&]() -> std::optional<std::string> {
    for (int k = 1; k <= n; ++k) {
      if (auto d = first_difference(to_semimod(schubert_poly(n, k, false, D)), closed_P(n, k, D)))
        return "upper k=" + std::to_string(k) + " " + *d;
      if (auto d = first_difference(to_semimod(schubert_poly(n, k, true, D)), closed_Q(n, k, D)))
        return "barred k=" + std::to_string(k) + " " + *d;
    }
    if (!(schubert_poly(n, n, false, D) == schubert_poly(n, n, true, D))) return std::string("upper and barred differ at k=n");
    return std::nullopt;
  }));
  out.push_back(run_check("images of F_{n+l} and F_{n-l} agree" + tag, [&]() -> std::optional<std::string> {
    for (int l = 1; l <= n; ++l)
      if (auto d = first_difference(to_semimod(f_poly(n, n + l, FRange::full(), D)),
                                    to_semimod(f_poly(n, n - l, FRange::full(), D))))
        return "l=" + std::to_string(l) + " " + *d;
    return std::nullopt;
  }));
  out.push_back(run_check("z_j z_j^{-1} and 1 map to the unit class" + tag, [&]() -> std::optional<std::string> {
    const SemiModElement unit = SemiModElement::basis(SignedPerm::identity(n), zeros(n), D);
    for (int j = 1; j <= n; ++j) {
      const ZLaurentElement z = ZLaurentElement::monomial(eps(j, n), unit_series(n, D));
      const ZLaurentElement zi = ZLaurentElement::monomial(eps(-j, n), unit_series(n, D));
      if (auto d = first_difference(to_semimod(z * zi), unit)) return "j=" + std::to_string(j) + " " + *d;
    }
    return first_difference(to_semimod(ZLaurentElement::constant(unit_series(n, D))), unit);
  }));
  return out;
}

std::vector<CheckRecord> check_q_zero(int n, int cap) {
  const int D = cap == kExact ? 2 * n + 2 : cap;
  const std::string tag = " n=" + std::to_string(n);
  std::vector<CheckRecord> out;
  out.push_back(run_check("F_l at Q=0 = e_l(z, z^-1)" + tag, [&]() -> std::optional<std::string> {
    for (int l = 0; l <= 2 * n; ++l) {
      const ZLaurentElement f0 = specialize_Q_zero(f_poly(n, l, FRange::full(), D));
      if (!(f0 == e_poly_z(n, l, D))) return "l=" + std::to_string(l) + ": " + f0.str();
    }
    return std::nullopt;
  }));
  out.push_back(run_check("coefficient mass at Q=0 = C(2n,l)" + tag, [&]() -> std::optional<std::string> {
    for (int l = 0; l <= 2 * n; ++l) {
      Int mass = 0;
      const ZLaurentElement f0 = specialize_Q_zero(f_poly(n, l, FRange::full(), D));
      for (const auto& [z, c] : f0.terms())
        for (const auto& [x, q] : c.terms())
          for (const auto& [mq, v] : q.terms()) mass += v;
      Int binom = 1;
      for (int i = 0; i < l; ++i) binom = binom * (2 * n - i) / (i + 1);
      if (mass != binom) return "l=" + std::to_string(l) + " mass " + int_str(mass);
    }
    return std::nullopt;
  }));
  out.push_back(run_check("ideal generators at Q=0 are classical" + tag, [&]() -> std::optional<std::string> {
    const auto gens = ideal_generators(n, D);
    if (static_cast<int>(gens.size()) != n) return std::string("wrong generator count");
    for (int l = 1; l <= n; ++l) {
      ZLaurentElement want = e_poly_z(n, l, D);
      want -= ZLaurentElement::constant(NovikovSeries::constant(n, n, D, QExtElement(elementary_E(l, n))));
      if (!(specialize_Q_zero(gens[static_cast<std::size_t>(l - 1)]) == want)) return "l=" + std::to_string(l);
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckRecord> check_polynomial_factorization(int n, int cap) {
  const int D = cap == kExact ? 2 * n + 2 : cap;
  return {run_check("sum of zeta*eta terms = sum of phi terms n=" + std::to_string(n), [&]() -> std::optional<std::string> {
    const long N = 1L << (2 * n);
    std::vector<NovikovSeries> a(static_cast<std::size_t>(N)), b(static_cast<std::size_t>(N));
#pragma omp parallel for schedule(dynamic, 16)
    for (long m = 0; m < N; ++m) {
      const LetterSet I(n, static_cast<unsigned>(m));
      SeriesFraction ze = frac_one(n), ph = frac_one(n);
      for (int x : letters(n)) {
        ze *= zeta(I, x) * eta(I, x);
        ph *= phi_q(I, x);
      }
      a[static_cast<std::size_t>(m)] = ze.expand(D);
      b[static_cast<std::size_t>(m)] = ph.expand(D);
    }
    ZLaurentElement lhs(n, D), rhs(n, D);
    for (long m = 0; m < N; ++m) {
      const Exponents z = z_exponent(LetterSet(n, static_cast<unsigned>(m)));
      lhs.add_term(z, a[static_cast<std::size_t>(m)]);
      rhs.add_term(z, b[static_cast<std::size_t>(m)]);
    }
    if (lhs == rhs) return std::nullopt;
    return std::string("polynomials differ");
  })};
}

}  // namespace qkc
