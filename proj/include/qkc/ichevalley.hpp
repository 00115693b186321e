#pragma once

#include "qkc/alcove.hpp"
#include "qkc/check.hpp"
#include "qkc/semimod.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qkc {

// (w, xi, lambda): the class of w t_xi twisted by O(lambda); xi in the alpha^vee basis
struct SemiKey {
  SignedPerm w;
  Exponents xi;
  Exponents lambda;
  std::string str() const;
  auto operator<=>(const SemiKey&) const = default;
};

class SemiClassSum {
 public:
  using Map = std::map<SemiKey, QExtElement>;

  SemiClassSum() = default;
  explicit SemiClassSum(int n) : n_(n) {}

  int rank() const { return n_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QExtElement coeff(const SemiKey& k) const;
  void add_term(const SemiKey& k, const QExtElement& c);
  // c q^qpow
  void add(const SemiKey& k, int qpow, const Int& c);

  SemiClassSum& operator+=(const SemiClassSum& o);
  SemiClassSum& operator-=(const SemiClassSum& o);
  friend SemiClassSum operator+(SemiClassSum a, const SemiClassSum& b) { return a += b; }
  friend SemiClassSum operator-(SemiClassSum a, const SemiClassSum& b) { return a -= b; }
  bool operator==(const SemiClassSum& o) const;

  SemiClassSum tensor(const Exponents& mu) const;
  // q := 1, t_xi recorded as T^xi
  SemiModElement at_q_one(int degree_cap) const;

  std::string str() const;
  Json to_json() const;

 private:
  int n_ = 0;
  Map terms_;
};

std::optional<std::string> first_difference(const SemiClassSum& a, const SemiClassSum& b);

// contribution of one chain (j_1, ..., j_r = j) started at mbar, leading mbar omitted
struct ChainContribution {
  int j = 0;
  bool barred = false;
  std::vector<int> chain;
  long walks = 0;          // admissible tuples (A_1, ..., A_r)
  SemiClassSum value;
  bool q_audit = true;     // every q-power equals +-<eps_j, down> recomputed in eps coordinates
  std::string chain_str(int m) const;
};

struct IcEvaluation {
  int m = 0;
  SignedPerm w;
  SemiClassSum first_block;  // the B-sum over A(w, Theta_m)
  std::vector<ChainContribution> chains;
  SemiClassSum total() const;
};

IcEvaluation evaluate_inverse_chevalley(const Qbg& g, const SignedPerm& w, int m);
IcEvaluation evaluate_inverse_chevalley_serial(const Qbg& g, const SignedPerm& w, int m);
SemiClassSum inverse_chevalley(const SignedPerm& w, int m);

// -w(eps_m)
Exponents ic_lhs_weight(const SignedPerm& w, int m);
// alpha_a^vee + ... + alpha_b^vee in the alpha^vee basis
Exponents coroot_run(int a, int b, int n);

SemiClassSum ic2_closed_form(int k, int n);

// e^{lhs_mu} [O(lhs_w)] = rhs
struct IcIdentity {
  Exponents lhs_mu;
  SignedPerm lhs_w;
  SemiClassSum rhs;
};

IcIdentity ic1_data(int k, int n);
IcIdentity ic2_data(int k, int n);

struct CancellationReport {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> survivors;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  long zero_chains = 0;   // chains outside survivors and pairs, each contributing 0
  long missing = 0;       // chains named by the pairing but absent from the enumeration
  long bad_pairs = 0;
  long bad_zero = 0;
  bool survivors_match = false;  // first block + survivors == closed form
  bool remainder_zero = false;   // full evaluation - closed form == 0
  std::string first_failure;
  bool ok() const { return missing == 0 && bad_pairs == 0 && bad_zero == 0 && survivors_match && remainder_zero; }
  Json to_json() const;
};

CancellationReport cancellation_report(int k, int n);

struct DerivedRecurrence {
  std::optional<BasisKey> target;  // the isolated class, absent when the identity has none
  SemiModElement rhs;
};

// tensor by O(twist), q := 1, move the target class to the left
DerivedRecurrence derive_recurrence(const IcIdentity& id, const Exponents& twist, int degree_cap);

// the two recurrences with basis classes prefix(j) and mountain(j) (mountain(0) := 0)
SemiModElement p_step_literal(int n, int k, int degree_cap);
SemiModElement q_step_literal(int n, int k, int degree_cap);

std::vector<CheckRecord> check_inverse_chevalley(int n);
std::vector<CheckRecord> check_derived_recurrences(int n, int degree_cap);
// xi >= 0 and q-audit for every w and m
std::vector<CheckRecord> check_ic_invariants(int n);

}  // namespace qkc
