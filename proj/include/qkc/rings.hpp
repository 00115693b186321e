#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkc {

using Int = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;
using Json = nlohmann::ordered_json;

// Truncation degree meaning "no truncation" (exact polynomial arithmetic).
inline constexpr int kExact = -1;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedOperand : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Exponents zeros(int n);
// 1-based slot i set to c.
Exponents unit_vector(int n, int i, int c = 1);
Exponents add_exp(const Exponents& a, const Exponents& b);
Exponents sub_exp(const Exponents& a, const Exponents& b);
Exponents neg_exp(const Exponents& a);
Exponents scale_exp(const Exponents& a, int c);
int dot(const Exponents& a, const Exponents& b);
int total_degree(const Exponents& a);
bool is_zero_exp(const Exponents& a);
std::string exp_str(const Exponents& a);
Json int_json(const Int& c);
std::string int_str(const Int& c);

inline bool is_zero(const Int& c) { return c == 0; }

template <class Key, class Coeff>
void accumulate(std::map<Key, Coeff>& m, const Key& k, const Coeff& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) m.erase(it);
  }
}

template <class Key, class Coeff>
void subtract_into(std::map<Key, Coeff>& m, const Key& k, const Coeff& c) {
  if (is_zero(c)) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, -c);
  } else {
    it->second -= c;
    if (is_zero(it->second)) m.erase(it);
  }
}

// Element of Z[P]: exact Laurent polynomial in e^{eps_1},...,e^{eps_n}.
class GroupRingElement {
 public:
  using Map = std::map<Exponents, Int>;

  GroupRingElement() = default;
  explicit GroupRingElement(int rank);
  static GroupRingElement monomial(const Exponents& e, const Int& c = 1);
  static GroupRingElement constant(int rank, const Int& c);

  int rank() const { return rank_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Int coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Int& c);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement& operator*=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r = a;
    return r *= b;
  }
  GroupRingElement operator-() const;
  bool operator==(const GroupRingElement& o) const;

  // multiply by e^mu
  GroupRingElement shifted(const Exponents& mu) const;
  GroupRingElement scaled(const Int& c) const;
  // e^mu -> e^{-mu}
  GroupRingElement inverted() const;

  std::string str() const;
  Json to_json() const;

 private:
  void adopt_rank(const GroupRingElement& o);
  int rank_ = 0;
  Map terms_;
};

inline bool is_zero(const GroupRingElement& a) { return a.is_zero(); }

// Quotient by a monomial or by a binomial c(e^mu - e^nu); throws DivisibilityError on remainder.
GroupRingElement exact_div(const GroupRingElement& a, const GroupRingElement& d);

struct QMonomial {
  int q = 0;
  Exponents e;
  auto operator<=>(const QMonomial&) const = default;
};

// Element of Z[q^{+-1}][P].
class QExtElement {
 public:
  using Map = std::map<QMonomial, Int>;

  QExtElement() = default;
  explicit QExtElement(int rank);
  explicit QExtElement(const GroupRingElement& g);
  static QExtElement monomial(int q, const Exponents& e, const Int& c = 1);
  static QExtElement constant(int rank, const Int& c);
  static QExtElement q_power(int rank, int k);

  int rank() const { return rank_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(int q, const Exponents& e, const Int& c);

  QExtElement& operator+=(const QExtElement& o);
  QExtElement& operator-=(const QExtElement& o);
  QExtElement& operator*=(const QExtElement& o);
  friend QExtElement operator+(QExtElement a, const QExtElement& b) { return a += b; }
  friend QExtElement operator-(QExtElement a, const QExtElement& b) { return a -= b; }
  friend QExtElement operator*(const QExtElement& a, const QExtElement& b) {
    QExtElement r = a;
    return r *= b;
  }
  QExtElement operator-() const;
  bool operator==(const QExtElement& o) const;

  GroupRingElement at_q_one() const;
  QExtElement inverted() const;
  QExtElement shifted(const Exponents& mu) const;
  // apply a Z-linear map to the Z[P] part, keeping q-powers
  template <class F>
  QExtElement map_group_part(F&& f) const;

  bool is_scalar() const;
  std::string str() const;
  Json to_json() const;

 private:
  void adopt_rank(const QExtElement& o);
  int rank_ = 0;
  Map terms_;
};

inline bool is_zero(const QExtElement& a) { return a.is_zero(); }

template <class F>
QExtElement QExtElement::map_group_part(F&& f) const {
  QExtElement r(rank_);
  for (const auto& [m, c] : terms_) {
    GroupRingElement image = f(GroupRingElement::monomial(m.e, c));
    for (const auto& [e, d] : image.terms()) r.add_term(m.q, e, d);
  }
  return r;
}

// Power series in nvars commuting variables, truncated at total degree cap (kExact: none),
// with Z[q^{+-1}][P] coefficients.
class NovikovSeries {
 public:
  using Map = std::map<Exponents, QExtElement>;

  NovikovSeries() = default;
  NovikovSeries(int nvars, int rank, int degree_cap);
  static NovikovSeries constant(int nvars, int rank, int degree_cap, const QExtElement& c);
  static NovikovSeries scalar(int nvars, int rank, int degree_cap, const Int& c);
  static NovikovSeries monomial(int nvars, int rank, int degree_cap, const Exponents& x, const Int& c = 1);
  // 1-based variable index
  static NovikovSeries variable(int nvars, int rank, int degree_cap, int j);

  int nvars() const { return nvars_; }
  int rank() const { return rank_; }
  int degree_cap() const { return cap_; }
  bool truncated() const { return cap_ != kExact; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QExtElement coeff(const Exponents& x) const;
  void add_term(const Exponents& x, const QExtElement& c);
  bool admits(const Exponents& x) const;

  NovikovSeries& operator+=(const NovikovSeries& o);
  NovikovSeries& operator-=(const NovikovSeries& o);
  NovikovSeries& operator*=(const NovikovSeries& o);
  friend NovikovSeries operator+(NovikovSeries a, const NovikovSeries& b) { return a += b; }
  friend NovikovSeries operator-(NovikovSeries a, const NovikovSeries& b) { return a -= b; }
  friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b);
  NovikovSeries operator-() const;
  bool operator==(const NovikovSeries& o) const;

  NovikovSeries scaled(const QExtElement& c) const;
  NovikovSeries scaled(const Int& c) const;
  // multiply by x^e
  NovikovSeries shifted(const Exponents& e) const;
  NovikovSeries with_cap(int degree_cap) const;
  NovikovSeries constant_part() const;
  NovikovSeries inverted_weights() const;
  int max_degree() const;

  std::string str(const std::string& var = "Q") const;
  Json to_json(const std::string& var = "Q") const;

 private:
  void adopt_shape(const NovikovSeries& o);
  int nvars_ = 0;
  int rank_ = 0;
  int cap_ = kExact;
  Map terms_;
};

inline bool is_zero(const NovikovSeries& a) { return a.is_zero(); }

// sum_{k=0}^{D} x_j^k
NovikovSeries geometric_inverse(int nvars, int rank, int j, int degree_cap);
// 1 - x_j
NovikovSeries one_minus(int nvars, int rank, int degree_cap, int j);
NovikovSeries power(const NovikovSeries& a, int k);

// Laurent polynomial in z_1..z_n with Novikov-series coefficients.
class ZLaurentElement {
 public:
  using Map = std::map<Exponents, NovikovSeries>;

  ZLaurentElement() = default;
  ZLaurentElement(int rank, int degree_cap);
  static ZLaurentElement constant(const NovikovSeries& c);
  static ZLaurentElement monomial(const Exponents& z, const NovikovSeries& c);

  int rank() const { return rank_; }
  int degree_cap() const { return cap_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  NovikovSeries coeff(const Exponents& z) const;
  void add_term(const Exponents& z, const NovikovSeries& c);

  ZLaurentElement& operator+=(const ZLaurentElement& o);
  ZLaurentElement& operator-=(const ZLaurentElement& o);
  ZLaurentElement& operator*=(const ZLaurentElement& o);
  friend ZLaurentElement operator+(ZLaurentElement a, const ZLaurentElement& b) { return a += b; }
  friend ZLaurentElement operator-(ZLaurentElement a, const ZLaurentElement& b) { return a -= b; }
  friend ZLaurentElement operator*(const ZLaurentElement& a, const ZLaurentElement& b) {
    ZLaurentElement r = a;
    return r *= b;
  }
  ZLaurentElement operator-() const;
  bool operator==(const ZLaurentElement& o) const;

  ZLaurentElement scaled(const NovikovSeries& c) const;

  std::string str() const;
  Json to_json() const;

 private:
  void adopt_shape(const ZLaurentElement& o);
  int rank_ = 0;
  int cap_ = kExact;
  Map terms_;
};

// Replace every coefficient by its degree-0 part.
ZLaurentElement specialize_Q_zero(const ZLaurentElement& f);

}  // namespace qkc
