#include "qkc/rings.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qkc {

Exponents zeros(int n) { return Exponents(static_cast<std::size_t>(n), 0); }

Exponents unit_vector(int n, int i, int c) {
  Exponents e = zeros(n);
  e.at(static_cast<std::size_t>(i - 1)) = c;
  return e;
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Exponents neg_exp(const Exponents& a) { return scale_exp(a, -1); }

Exponents scale_exp(const Exponents& a, int c) {
  Exponents r(a);
  for (auto& x : r) x *= c;
  return r;
}

int dot(const Exponents& a, const Exponents& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int total_degree(const Exponents& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

bool is_zero_exp(const Exponents& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

std::string exp_str(const Exponents& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

std::string int_str(const Int& c) { return c.str(); }

Json int_json(const Int& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(c));
  return Json(c.str());
}

namespace {

struct Term {
  Int c;
  std::vector<std::string> factors;
};

std::string render_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    std::string mono;
    for (const auto& f : t.factors) {
      if (!mono.empty()) mono += "*";
      mono += f;
    }
    Int a = t.c < 0 ? Int(-t.c) : t.c;
    std::string body;
    if (mono.empty()) body = a.str();
    else if (a == 1) body = mono;
    else body = a.str() + "*" + mono;
    if (first) {
      out = (t.c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (t.c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string e_factor(const Exponents& e) { return is_zero_exp(e) ? "" : "e" + exp_str(e); }

std::string power_factor(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

void push(std::vector<std::string>& v, std::string s) {
  if (!s.empty()) v.push_back(std::move(s));
}

std::vector<Term> qext_terms(const QExtElement& a) {
  std::vector<Term> out;
  for (const auto& [m, c] : a.terms()) {
    Term t{c, {}};
    push(t.factors, power_factor("q", m.q));
    push(t.factors, e_factor(m.e));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Term> series_terms(const NovikovSeries& s, const std::string& var) {
  std::vector<Term> out;
  for (const auto& [x, c] : s.terms()) {
    for (auto t : qext_terms(c)) {
      for (std::size_t j = 0; j < x.size(); ++j) push(t.factors, power_factor(var + std::to_string(j + 1), x[j]));
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

// ---- GroupRingElement

GroupRingElement::GroupRingElement(int rank) : rank_(rank) {}

GroupRingElement GroupRingElement::monomial(const Exponents& e, const Int& c) {
  GroupRingElement r(static_cast<int>(e.size()));
  r.add_term(e, c);
  return r;
}

GroupRingElement GroupRingElement::constant(int rank, const Int& c) { return monomial(zeros(rank), c); }

Int GroupRingElement::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void GroupRingElement::add_term(const Exponents& e, const Int& c) {
  if (static_cast<int>(e.size()) != rank_) throw ConfigError("exponent vector length does not match rank");
  accumulate(terms_, e, c);
}

void GroupRingElement::adopt_rank(const GroupRingElement& o) {
  if (rank_ == o.rank_) return;
  if (rank_ == 0 && terms_.empty()) {
    rank_ = o.rank_;
    return;
  }
  if (o.rank_ == 0 && o.terms_.empty()) return;
  throw ConfigError("rank mismatch in group ring arithmetic");
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  adopt_rank(o);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  adopt_rank(o);
  for (const auto& [e, c] : o.terms_) subtract_into(terms_, e, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const GroupRingElement& o) {
  adopt_rank(o);
  Map r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) accumulate(r, add_exp(e1, e2), Int(c1 * c2));
  terms_ = std::move(r);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const { return scaled(-1); }

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  return rank_ == o.rank_ && terms_ == o.terms_;
}

GroupRingElement GroupRingElement::shifted(const Exponents& mu) const {
  GroupRingElement r(rank_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add_exp(e, mu), c);
  return r;
}

GroupRingElement GroupRingElement::scaled(const Int& c) const {
  GroupRingElement r(rank_);
  if (c == 0) return r;
  for (const auto& [e, d] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, d * c);
  return r;
}

GroupRingElement GroupRingElement::inverted() const {
  GroupRingElement r(rank_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(neg_exp(e), c);
  return r;
}

std::string GroupRingElement::str() const {
  std::vector<Term> ts;
  for (const auto& [e, c] : terms_) {
    Term t{c, {}};
    push(t.factors, e_factor(e));
    ts.push_back(std::move(t));
  }
  return render_terms(ts);
}

Json GroupRingElement::to_json() const {
  Json arr = Json::array();
  for (const auto& [e, c] : terms_) arr.push_back(Json{{"e", e}, {"c", int_json(c)}});
  return arr;
}

GroupRingElement exact_div(const GroupRingElement& a, const GroupRingElement& d) {
  if (d.is_zero()) throw DivisibilityError("division by zero");
  const int n = d.rank();
  auto it = d.terms().begin();
  const Exponents mu = it->first;
  const Int c1 = it->second;

  // monomial part first: a / (c1 e^mu)
  GroupRingElement scaled(n);
  for (const auto& [e, c] : a.terms()) {
    if (c % c1 != 0) throw DivisibilityError("coefficient not divisible by " + c1.str());
    scaled.add_term(sub_exp(e, mu), c / c1);
  }
  if (d.size() == 1) return scaled;
  if (d.size() != 2) throw ConfigError("exact_div supports monomial or binomial divisors only");
  ++it;
  if (it->second != -c1) throw ConfigError("binomial divisor must have the form c(e^mu - e^nu)");
  const Exponents gamma = sub_exp(it->first, mu);
  // divide by (1 - e^gamma), reducing along the grading g = gamma
  const Exponents& g = gamma;
  const int step = dot(g, gamma);
  int top = std::numeric_limits<int>::min();
  for (const auto& [e, c] : scaled.terms()) top = std::max(top, dot(g, e));
  const int bound = top - step;

  std::map<std::pair<int, Exponents>, Int> rem;
  for (const auto& [e, c] : scaled.terms()) rem.emplace(std::make_pair(dot(g, e), e), c);
  GroupRingElement q(n);
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (lead->first.first > bound) throw DivisibilityError("remainder after binomial division: " + scaled.str());
    const Exponents e = lead->first.second;
    const Int c = lead->second;
    q.add_term(e, c);
    rem.erase(lead);
    Exponents up = add_exp(e, gamma);
    accumulate(rem, std::make_pair(dot(g, up), up), c);
  }
  return q;
}

// ---- QExtElement

QExtElement::QExtElement(int rank) : rank_(rank) {}

QExtElement::QExtElement(const GroupRingElement& g) : rank_(g.rank()) {
  for (const auto& [e, c] : g.terms()) terms_.emplace(QMonomial{0, e}, c);
}

QExtElement QExtElement::monomial(int q, const Exponents& e, const Int& c) {
  QExtElement r(static_cast<int>(e.size()));
  r.add_term(q, e, c);
  return r;
}

QExtElement QExtElement::constant(int rank, const Int& c) { return monomial(0, zeros(rank), c); }

QExtElement QExtElement::q_power(int rank, int k) { return monomial(k, zeros(rank), 1); }

void QExtElement::add_term(int q, const Exponents& e, const Int& c) {
  if (static_cast<int>(e.size()) != rank_) throw ConfigError("exponent vector length does not match rank");
  accumulate(terms_, QMonomial{q, e}, c);
}

void QExtElement::adopt_rank(const QExtElement& o) {
  if (rank_ == o.rank_) return;
  if (rank_ == 0 && terms_.empty()) {
    rank_ = o.rank_;
    return;
  }
  if (o.rank_ == 0 && o.terms_.empty()) return;
  throw ConfigError("rank mismatch in q-extended arithmetic");
}

QExtElement& QExtElement::operator+=(const QExtElement& o) {
  adopt_rank(o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

QExtElement& QExtElement::operator-=(const QExtElement& o) {
  adopt_rank(o);
  for (const auto& [m, c] : o.terms_) subtract_into(terms_, m, c);
  return *this;
}

QExtElement& QExtElement::operator*=(const QExtElement& o) {
  adopt_rank(o);
  Map r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) accumulate(r, QMonomial{m1.q + m2.q, add_exp(m1.e, m2.e)}, Int(c1 * c2));
  terms_ = std::move(r);
  return *this;
}

QExtElement QExtElement::operator-() const {
  QExtElement r(rank_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

bool QExtElement::operator==(const QExtElement& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  return rank_ == o.rank_ && terms_ == o.terms_;
}

GroupRingElement QExtElement::at_q_one() const {
  GroupRingElement r(rank_);
  for (const auto& [m, c] : terms_) r.add_term(m.e, c);
  return r;
}

QExtElement QExtElement::inverted() const {
  QExtElement r(rank_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(QMonomial{m.q, neg_exp(m.e)}, c);
  return r;
}

QExtElement QExtElement::shifted(const Exponents& mu) const {
  QExtElement r(rank_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(QMonomial{m.q, add_exp(m.e, mu)}, c);
  return r;
}

bool QExtElement::is_scalar() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.q == 0 && is_zero_exp(terms_.begin()->first.e);
}

std::string QExtElement::str() const { return render_terms(qext_terms(*this)); }

Json QExtElement::to_json() const {
  Json arr = Json::array();
  for (const auto& [m, c] : terms_) arr.push_back(Json{{"q", m.q}, {"e", m.e}, {"c", int_json(c)}});
  return arr;
}

// ---- NovikovSeries

NovikovSeries::NovikovSeries(int nvars, int rank, int degree_cap) : nvars_(nvars), rank_(rank), cap_(degree_cap) {
  if (degree_cap < kExact) throw ConfigError("truncation degree must be non-negative");
}

NovikovSeries NovikovSeries::constant(int nvars, int rank, int degree_cap, const QExtElement& c) {
  NovikovSeries r(nvars, rank, degree_cap);
  r.add_term(zeros(nvars), c);
  return r;
}

NovikovSeries NovikovSeries::scalar(int nvars, int rank, int degree_cap, const Int& c) {
  return constant(nvars, rank, degree_cap, QExtElement::constant(rank, c));
}

NovikovSeries NovikovSeries::monomial(int nvars, int rank, int degree_cap, const Exponents& x, const Int& c) {
  NovikovSeries r(nvars, rank, degree_cap);
  r.add_term(x, QExtElement::constant(rank, c));
  return r;
}

NovikovSeries NovikovSeries::variable(int nvars, int rank, int degree_cap, int j) {
  if (j < 1 || j > nvars) throw ConfigError("series variable index out of range");
  return monomial(nvars, rank, degree_cap, unit_vector(nvars, j), 1);
}

QExtElement NovikovSeries::coeff(const Exponents& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? QExtElement(rank_) : it->second;
}

bool NovikovSeries::admits(const Exponents& x) const { return cap_ == kExact || total_degree(x) <= cap_; }

void NovikovSeries::add_term(const Exponents& x, const QExtElement& c) {
  if (static_cast<int>(x.size()) != nvars_) throw ConfigError("series exponent length does not match variable count");
  for (int v : x)
    if (v < 0) throw ConfigError("negative series exponent");
  if (!admits(x)) return;
  accumulate(terms_, x, c);
}

void NovikovSeries::adopt_shape(const NovikovSeries& o) {
  if (nvars_ == o.nvars_ && rank_ == o.rank_ && cap_ == o.cap_) return;
  if (nvars_ == 0 && terms_.empty()) {
    nvars_ = o.nvars_;
    rank_ = o.rank_;
    cap_ = o.cap_;
    return;
  }
  if (o.nvars_ == 0 && o.terms_.empty()) return;
  throw ConfigError("series shape mismatch (variables, rank or truncation degree)");
}

NovikovSeries& NovikovSeries::operator+=(const NovikovSeries& o) {
  adopt_shape(o);
  for (const auto& [x, c] : o.terms_) accumulate(terms_, x, c);
  return *this;
}

NovikovSeries& NovikovSeries::operator-=(const NovikovSeries& o) {
  adopt_shape(o);
  for (const auto& [x, c] : o.terms_) subtract_into(terms_, x, c);
  return *this;
}

NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
  NovikovSeries r = a;
  r.adopt_shape(b);
  NovikovSeries::Map out;
  for (const auto& [x1, c1] : a.terms_) {
    for (const auto& [x2, c2] : b.terms_) {
      Exponents x = add_exp(x1, x2);
      if (!r.admits(x)) continue;
      accumulate(out, x, c1 * c2);
    }
  }
  r.terms_ = std::move(out);
  return r;
}

NovikovSeries& NovikovSeries::operator*=(const NovikovSeries& o) { return *this = *this * o; }

NovikovSeries NovikovSeries::operator-() const { return scaled(Int(-1)); }

bool NovikovSeries::operator==(const NovikovSeries& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  return nvars_ == o.nvars_ && cap_ == o.cap_ && terms_ == o.terms_;
}

NovikovSeries NovikovSeries::scaled(const QExtElement& c) const {
  NovikovSeries r(nvars_, rank_, cap_);
  for (const auto& [x, d] : terms_) accumulate(r.terms_, x, d * c);
  return r;
}

NovikovSeries NovikovSeries::scaled(const Int& c) const {
  NovikovSeries r(nvars_, rank_, cap_);
  if (c == 0) return r;
  for (const auto& [x, d] : terms_) {
    QExtElement e(rank_);
    for (const auto& [m, v] : d.terms()) e.add_term(m.q, m.e, v * c);
    r.terms_.emplace_hint(r.terms_.end(), x, std::move(e));
  }
  return r;
}

NovikovSeries NovikovSeries::shifted(const Exponents& e) const {
  NovikovSeries r(nvars_, rank_, cap_);
  for (const auto& [x, d] : terms_) r.add_term(add_exp(x, e), d);
  return r;
}

NovikovSeries NovikovSeries::with_cap(int degree_cap) const {
  NovikovSeries r(nvars_, rank_, degree_cap);
  for (const auto& [x, d] : terms_) r.add_term(x, d);
  return r;
}

NovikovSeries NovikovSeries::constant_part() const {
  NovikovSeries r(nvars_, rank_, cap_);
  auto it = terms_.find(zeros(nvars_));
  if (it != terms_.end()) r.terms_.emplace(it->first, it->second);
  return r;
}

NovikovSeries NovikovSeries::inverted_weights() const {
  NovikovSeries r(nvars_, rank_, cap_);
  for (const auto& [x, d] : terms_) r.terms_.emplace(x, d.inverted());
  return r;
}

int NovikovSeries::max_degree() const {
  int m = 0;
  for (const auto& [x, d] : terms_) m = std::max(m, total_degree(x));
  return m;
}

std::string NovikovSeries::str(const std::string& var) const { return render_terms(series_terms(*this, var)); }

Json NovikovSeries::to_json(const std::string& var) const {
  Json arr = Json::array();
  for (const auto& [x, d] : terms_) arr.push_back(Json{{var, x}, {"coeff", d.to_json()}});
  return arr;
}

NovikovSeries geometric_inverse(int nvars, int rank, int j, int degree_cap) {
  if (degree_cap == kExact) throw ConfigError("geometric inverse needs a finite truncation degree");
  if (j < 1 || j > nvars) throw ConfigError("series variable index out of range");
  NovikovSeries r(nvars, rank, degree_cap);
  for (int k = 0; k <= degree_cap; ++k) r.add_term(unit_vector(nvars, j, k), QExtElement::constant(rank, 1));
  return r;
}

NovikovSeries one_minus(int nvars, int rank, int degree_cap, int j) {
  return NovikovSeries::scalar(nvars, rank, degree_cap, 1) - NovikovSeries::variable(nvars, rank, degree_cap, j);
}

NovikovSeries power(const NovikovSeries& a, int k) {
  if (k < 0) throw ConfigError("negative power of a series");
  NovikovSeries r = NovikovSeries::scalar(a.nvars(), a.rank(), a.degree_cap(), 1);
  for (int i = 0; i < k; ++i) r *= a;
  return r;
}

// ---- ZLaurentElement

ZLaurentElement::ZLaurentElement(int rank, int degree_cap) : rank_(rank), cap_(degree_cap) {}

ZLaurentElement ZLaurentElement::constant(const NovikovSeries& c) {
  return monomial(zeros(c.nvars()), c);
}

ZLaurentElement ZLaurentElement::monomial(const Exponents& z, const NovikovSeries& c) {
  ZLaurentElement r(c.rank(), c.degree_cap());
  r.add_term(z, c);
  return r;
}

NovikovSeries ZLaurentElement::coeff(const Exponents& z) const {
  auto it = terms_.find(z);
  return it == terms_.end() ? NovikovSeries(rank_, rank_, cap_) : it->second;
}

void ZLaurentElement::add_term(const Exponents& z, const NovikovSeries& c) {
  if (static_cast<int>(z.size()) != rank_) throw ConfigError("z-exponent length does not match rank");
  if (!c.is_zero() && (c.degree_cap() != cap_ || c.rank() != rank_))
    throw ConfigError("coefficient shape does not match Laurent element");
  accumulate(terms_, z, c);
}

void ZLaurentElement::adopt_shape(const ZLaurentElement& o) {
  if (rank_ == o.rank_ && cap_ == o.cap_) return;
  if (rank_ == 0 && terms_.empty()) {
    rank_ = o.rank_;
    cap_ = o.cap_;
    return;
  }
  if (o.rank_ == 0 && o.terms_.empty()) return;
  throw ConfigError("shape mismatch in Laurent arithmetic");
}

ZLaurentElement& ZLaurentElement::operator+=(const ZLaurentElement& o) {
  adopt_shape(o);
  for (const auto& [z, c] : o.terms_) accumulate(terms_, z, c);
  return *this;
}

ZLaurentElement& ZLaurentElement::operator-=(const ZLaurentElement& o) {
  adopt_shape(o);
  for (const auto& [z, c] : o.terms_) subtract_into(terms_, z, c);
  return *this;
}

ZLaurentElement& ZLaurentElement::operator*=(const ZLaurentElement& o) {
  adopt_shape(o);
  Map r;
  for (const auto& [z1, c1] : terms_)
    for (const auto& [z2, c2] : o.terms_) accumulate(r, add_exp(z1, z2), c1 * c2);
  terms_ = std::move(r);
  return *this;
}

ZLaurentElement ZLaurentElement::operator-() const {
  ZLaurentElement r(rank_, cap_);
  for (const auto& [z, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), z, -c);
  return r;
}

bool ZLaurentElement::operator==(const ZLaurentElement& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  return rank_ == o.rank_ && terms_ == o.terms_;
}

ZLaurentElement ZLaurentElement::scaled(const NovikovSeries& c) const {
  ZLaurentElement r(rank_, cap_);
  for (const auto& [z, d] : terms_) accumulate(r.terms_, z, d * c);
  return r;
}

std::string ZLaurentElement::str() const {
  std::vector<Term> ts;
  for (const auto& [z, c] : terms_) {
    for (auto t : series_terms(c, "Q")) {
      for (std::size_t j = 0; j < z.size(); ++j) push(t.factors, power_factor("z" + std::to_string(j + 1), z[j]));
      ts.push_back(std::move(t));
    }
  }
  return render_terms(ts);
}

Json ZLaurentElement::to_json() const {
  Json arr = Json::array();
  for (const auto& [z, c] : terms_) arr.push_back(Json{{"z", z}, {"coeff", c.to_json("Q")}});
  return arr;
}

ZLaurentElement specialize_Q_zero(const ZLaurentElement& f) {
  ZLaurentElement r(f.rank(), f.degree_cap());
  for (const auto& [z, c] : f.terms()) r.add_term(z, c.constant_part());
  return r;
}

}  // namespace qkc
