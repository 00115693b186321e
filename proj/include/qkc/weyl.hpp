#pragma once

#include "qkc/rings.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qkc {

// Letters of [1, 1bar]: +k is k, -k is k-bar, ordered 1 < ... < n < -n < ... < -1.
int order_pos(int x, int n);
bool letter_less(int a, int b, int n);
std::vector<int> letters(int n);
// letters strictly between a and b (a < b in the order), increasing
std::vector<int> letters_between(int a, int b, int n);
// eps_x with eps_{-k} = -eps_k
Exponents eps(int x, int n);

class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> window);
  static SignedPerm identity(int n);
  // "[2,3,-1]"
  static SignedPerm parse(const std::string& text);

  int rank() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }
  int operator()(int x) const { return x > 0 ? w_[static_cast<std::size_t>(x - 1)] : -w_[static_cast<std::size_t>(-x - 1)]; }
  // (u*v)(k) = u(v(k))
  SignedPerm operator*(const SignedPerm& o) const;
  SignedPerm inverse() const;
  Exponents act_weight(const Exponents& lambda) const;
  bool is_identity() const;

  std::string str() const;
  auto operator<=>(const SignedPerm&) const = default;

 private:
  std::vector<int> w_;
};

// Positive root (i, j): j a signed letter with i < j in the order.
// j > 0: eps_i - eps_j; j = -m (m != i): eps_i + eps_m; j = -i: 2 eps_i.
struct RootC {
  int i = 1;
  int j = 2;
  bool is_long() const { return j == -i; }
  std::string str() const;
  auto operator<=>(const RootC&) const = default;
};

std::vector<RootC> positive_roots(int n);
bool is_positive_root(const RootC& r, int n);
Exponents root_weight(const RootC& r, int n);
Exponents coroot_eps(const RootC& r, int n);
// coroot in the basis alpha_1^vee..alpha_n^vee
Exponents coroot_alpha(const RootC& r, int n);
// coroot lattice element from alpha^vee basis to eps coordinates
Exponents alpha_to_eps(const Exponents& c);
Exponents eps_to_alpha(const Exponents& v);
// <eps_j, xi> with xi given in the alpha^vee basis
int eps_pair_alpha(int j, const Exponents& xi);
int pairing(const Exponents& lambda, const Exponents& coroot_in_eps);
Exponents simple_root(int i, int n);
Exponents simple_coroot_eps(int i, int n);
int cartan(int i, int j, int n);
bool is_positive_vector(const Exponents& v);
Exponents rho(int n);

SignedPerm reflection(const RootC& r, int n);
SignedPerm simple_reflection(int i, int n);
SignedPerm word(const std::vector<int>& simple_indices, int n);
int length(const SignedPerm& w);
SignedPerm longest_element(int n);
// s_1 ... s_n s_{n-1} ... s_k, window [2,..,k,-1,k+1,..,n]
SignedPerm mountain(int k, int n);
// s_1 ... s_k (identity for k = 0)
SignedPerm prefix(int k, int n);

std::vector<SignedPerm> enumerate_group(int n);
// position in enumerate_group order
std::size_t group_index(const SignedPerm& w);

// D_i(e^nu) closed form, extended linearly
GroupRingElement demazure(int i, const GroupRingElement& f);
// (e^nu - e^{alpha_i} e^{s_i nu}) / (1 - e^{alpha_i}) through exact division
GroupRingElement demazure_fraction(int i, const GroupRingElement& f);

}  // namespace qkc
