#pragma once

#include "qkc/check.hpp"
#include "qkc/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qkc {

enum class EdgeKind { Bruhat, Quantum };

std::string kind_str(EdgeKind k);

std::optional<EdgeKind> edge_by_length(const SignedPerm& w, const RootC& a);
std::optional<EdgeKind> edge_by_pattern(const SignedPerm& w, const RootC& a);

struct QbgEdge {
  SignedPerm source;
  RootC root;
  SignedPerm target;
  EdgeKind kind;
};

// Full quantum Bruhat graph with an indexed edge table (vertex x root).
class Qbg {
 public:
  explicit Qbg(int n);

  int rank() const { return n_; }
  const std::vector<SignedPerm>& vertices() const { return vertices_; }
  const std::vector<RootC>& roots() const { return roots_; }
  int root_index(const RootC& a) const;
  // table lookup; -1 none, 0 Bruhat, 1 Quantum
  std::optional<EdgeKind> edge(const SignedPerm& w, const RootC& a) const;
  int vertex_length(const SignedPerm& w) const;

 private:
  int n_;
  std::vector<SignedPerm> vertices_;
  std::vector<RootC> roots_;
  std::vector<int> lengths_;
  std::vector<signed char> table_;
};

std::vector<QbgEdge> build_graph(int n);
std::vector<QbgEdge> build_graph_serial(int n);

struct CrossCheck {
  int n = 0;
  long pairs = 0;
  long bruhat = 0;
  long quantum = 0;
  long none = 0;
  long disagreements = 0;
  std::string first_mismatch;
};

CrossCheck cross_check(int n);
CrossCheck cross_check_serial(int n);

std::string export_dot(int n, const std::vector<QbgEdge>& edges);
Json export_json(int n, const std::vector<QbgEdge>& edges);

// pattern vs length agreement, simple-edge and length-drop properties
std::vector<CheckRecord> check_qbg(int n);

}  // namespace qkc
