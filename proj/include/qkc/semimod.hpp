#pragma once

#include "qkc/check.hpp"
#include "qkc/fraction.hpp"
#include "qkc/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qkc {

// Subset of [1, 1bar]; bit p is the letter at order position p+1.
class LetterSet {
 public:
  LetterSet() = default;
  explicit LetterSet(int n, unsigned mask = 0) : n_(n), mask_(mask) {}
  static LetterSet of(int n, const std::vector<int>& xs);

  int rank() const { return n_; }
  unsigned mask() const { return mask_; }
  bool contains(int x) const;
  void insert(int x);
  void erase(int x);
  int size() const;
  // increasing in the letter order
  std::vector<int> members() const;
  // eps_I = sum of eps_x, x in I
  Exponents eps_sum() const;
  std::string str() const;
  auto operator<=>(const LetterSet&) const = default;

 private:
  int n_ = 0;
  unsigned mask_ = 0;
};

// a and abar both in I with no element of I strictly between them
bool consecutive(const LetterSet& I, int a);

struct BasisKey {
  SignedPerm w;
  Exponents lambda;
  std::string str() const;
  auto operator<=>(const BasisKey&) const = default;
};

// Finite sum over (w, lambda) with coefficients in the shift-operator series ring.
class SemiModElement {
 public:
  using Map = std::map<BasisKey, NovikovSeries>;

  SemiModElement() = default;
  SemiModElement(int n, int degree_cap);
  // [O(w)(lambda)] with coefficient 1
  static SemiModElement basis(const SignedPerm& w, const Exponents& lambda, int degree_cap);

  int rank() const { return n_; }
  int degree_cap() const { return cap_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  NovikovSeries coeff(const BasisKey& k) const;
  void add_term(const BasisKey& k, const NovikovSeries& c);

  SemiModElement& operator+=(const SemiModElement& o);
  SemiModElement& operator-=(const SemiModElement& o);
  friend SemiModElement operator+(SemiModElement a, const SemiModElement& b) { return a += b; }
  friend SemiModElement operator-(SemiModElement a, const SemiModElement& b) { return a -= b; }
  SemiModElement operator-() const;
  bool operator==(const SemiModElement& o) const;

  // tensor by O(mu)
  SemiModElement tensor(const Exponents& mu) const;
  // apply T^xi (xi in the alpha^vee basis, nonnegative)
  SemiModElement t_shift(const Exponents& xi) const;
  SemiModElement scaled(const NovikovSeries& c) const;
  SemiModElement scaled(const QExtElement& c) const;
  // multiply by c e^mu
  SemiModElement scaled_e(const Exponents& mu, const Int& c = 1) const;

  std::string str() const;
  Json to_json() const;

 private:
  void adopt_shape(const SemiModElement& o);
  int n_ = 0;
  int cap_ = kExact;
  Map terms_;
};

// names the first differing (w, lambda, T-monomial), nullopt when equal
std::optional<std::string> first_difference(const SemiModElement& a, const SemiModElement& b);

// T_a T_{a+1} ... T_b as an exponent vector (empty product when a > b)
Exponents t_run(int a, int b, int n);

// coefficient factors, exact polynomials / fractions in T_1..T_n
NovikovSeries psi(const LetterSet& I, int x, int degree_cap = kExact);
NovikovSeries psi_product(const LetterSet& I, int degree_cap = kExact);
SeriesFraction phi_sinf(const LetterSet& I, int x);
SeriesFraction theta_sinf(const LetterSet& I, int x);

// Index ranges for the F sums: full [1,1bar], upper [1,k], barred [1,(k+1)bar] with (n+1)bar = n.
enum class RangeKind { Full, Upper, Barred };

struct FRange {
  RangeKind kind = RangeKind::Full;
  int k = 0;
  static FRange full() { return {RangeKind::Full, 0}; }
  static FRange upper(int k) { return {RangeKind::Upper, k}; }
  static FRange barred(int k) { return {RangeKind::Barred, k}; }
  // the range is always an initial segment of the letter order
  int length(int n) const;
  int max_size(int n) const { return length(n); }
  std::string str() const;
};

// all I inside the range with |I| = l, in increasing mask order
std::vector<LetterSet> subsets_in_range(int n, int l, const FRange& r);

SemiModElement ff(int n, int l, const FRange& r, int degree_cap);
SemiModElement ff_serial(int n, int l, const FRange& r, int degree_cap);

// sum (-1)^l e^{l eps_1} F_l^k and the barred analogue (k = 0 gives the full range)
SemiModElement closed_P(int n, int k, int degree_cap);
SemiModElement closed_Q(int n, int k, int degree_cap);

// right-hand sides of the two recurrences with P_j, Q_j supplied by the caller
SemiModElement p_step_rhs(int n, int k, const std::vector<SemiModElement>& P);
SemiModElement q_step_rhs(int n, int k, const std::vector<SemiModElement>& P, const std::vector<SemiModElement>& Q);

std::vector<CheckRecord> check_recursion(int n, int degree_cap);
std::vector<CheckRecord> check_symmetry(int n, int degree_cap);

struct Decomposition {
  std::vector<int> A;  // i in I, ibar not
  std::vector<int> B;  // ibar in I, i not
  std::vector<int> K;  // both
};

Decomposition decompose(const LetterSet& I);
LetterSet star_map(const LetterSet& I);
// J_{A,B}^k
std::vector<LetterSet> jab_sets(int n, const std::vector<int>& A, const std::vector<int>& B, int k);
bool duality_hypothesis(const LetterSet& I);

struct DualityStats {
  long groups = 0;        // (A, B, k) triples compared
  long hypothesis_cases = 0;   // I meeting the duality hypothesis
  long st_cases = 0;      // (A, B, J, p) instances of S = T
  long group_failures = 0;
  long hypothesis_failures = 0;
  long st_failures = 0;
  long involution_failures = 0;
  std::string first_failure;
  bool operator==(const DualityStats&) const = default;
};

DualityStats duality_stats(int n);
DualityStats duality_stats_serial(int n);
std::vector<CheckRecord> check_duality(int n);
std::vector<CheckRecord> check_factorization_sinf(int n);

// D_i on the R(T) part of every coefficient; only translation classes are accepted
SemiModElement demazure_module(int i, const SemiModElement& z);

}  // namespace qkc
