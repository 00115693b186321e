#pragma once

#include "qkc/check.hpp"
#include "qkc/qbg.hpp"

#include <string>
#include <vector>

namespace qkc {

// A root of a sequence; every root in Theta_k and Gamma_k(k) is negative.
struct SignedRoot {
  RootC root;
  bool negative = true;
  std::string str() const;
  bool operator==(const SignedRoot&) const = default;
};

using RootSequence = std::vector<SignedRoot>;

RootSequence theta_seq(int k, int n);
RootSequence gamma_seq(int k, int n);
// x > 0: Theta_x, x < 0: Gamma_{-x}(-x)
RootSequence sequence_for(int x, int n);
// "theta:K" or "gamma:K"
RootSequence parse_sequence(const std::string& spec, int n);
std::string sequence_str(const RootSequence& s);

struct AdmissibleSubset {
  std::vector<int> positions;  // 0-based, increasing
  std::vector<SignedPerm> path;
  std::vector<EdgeKind> kinds;
  SignedPerm end;
  Exponents down;  // alpha^vee basis
  std::size_t size() const { return positions.size(); }
  std::string label(const RootSequence& s) const;
  Json to_json(const RootSequence& s) const;
};

std::vector<AdmissibleSubset> admissible_subsets(const Qbg& g, const SignedPerm& w, const RootSequence& s);
// one enumeration per vertex of the graph, in vertex order
std::vector<std::vector<AdmissibleSubset>> admissible_for_all(const Qbg& g, const RootSequence& s);

// decreasing chains m > j_1 > ... > j_r = j in the letter order
std::vector<std::vector<int>> s_chains(int m, int j, int n);

// nonempty A in A(w, seq(source)) with end(A)^{-1} w eps_source = eps_l
std::vector<AdmissibleSubset> a_filtered(const Qbg& g, const SignedPerm& w, int source, int l);

// the explicit listings at s_1..s_n..s_k and s_1..s_i
std::vector<CheckRecord> check_listings(int n);
// path validity, nonnegative down, prefix closure, chain counts, filter vs brute force
std::vector<CheckRecord> check_alcove_invariants(int n);

}  // namespace qkc
