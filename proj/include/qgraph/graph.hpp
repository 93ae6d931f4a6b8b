#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "qgraph/ledger.hpp"
#include "qgraph/weight.hpp"

namespace qgraph {

// Dense weighted complete digraph on vertices 0..n-1. Immutable once built;
// the diagonal is never a valid query.
class CompleteGraph {
 public:
  explicit CompleteGraph(int n);

  int size() const { return n_; }

  Weight weight(int u, int v) const;
  void set_weight(int u, int v, Weight w);

  // Raw table access for inner loops; callers guarantee u != v in range.
  double weight_value(int u, int v) const { return table_[idx(u, v)]; }

  bool has_infinite_edge() const;
  bool is_symmetric() const;

  friend bool operator==(const CompleteGraph& a, const CompleteGraph& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  void check_pair(int u, int v) const;

  int n_;
  std::vector<double> table_;
};

// Complete bipartite digraph: parts V1 = 0..n1-1 and V2 = 0..n2-1 with two
// dense cross tables, one per direction.
class BipartiteGraph {
 public:
  BipartiteGraph(int n1, int n2);

  int size1() const { return n1_; }
  int size2() const { return n2_; }

  // v1 -> v2 direction.
  Weight weight1(int u, int v) const;
  void set_weight1(int u, int v, Weight w);
  double weight1_value(int u, int v) const {
    return forward_[static_cast<std::size_t>(u) * n2_ + v];
  }

  // v2 -> v1 direction.
  Weight weight2(int u, int v) const;
  void set_weight2(int u, int v, Weight w);
  double weight2_value(int u, int v) const {
    return backward_[static_cast<std::size_t>(u) * n1_ + v];
  }

  bool has_infinite_edge() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.forward_ == b.forward_ &&
           a.backward_ == b.backward_;
  }

 private:
  int n1_, n2_;
  std::vector<double> forward_;   // n1 x n2
  std::vector<double> backward_;  // n2 x n1
};

using AnyGraph = std::variant<CompleteGraph, BipartiteGraph>;

enum class GraphShape { Complete, Bipartite };

// Deterministic generator input: the same spec yields a bit-identical graph
// on every platform (weights come from SplitMix64, filled in a fixed order).
struct GraphGenSpec {
  GraphShape shape = GraphShape::Complete;
  int n = 0;        // complete
  int n1 = 0;       // bipartite
  int n2 = 0;
  std::uint64_t seed = 0;
  bool symmetric = false;  // complete only; mirror the upper triangle
};

CompleteGraph generate_complete(const GraphGenSpec& spec);
BipartiteGraph generate_bipartite(const GraphGenSpec& spec);
AnyGraph generate(const GraphGenSpec& spec);

// Ledger-instrumented oracle read: one query, charged to the given phase.
inline Weight charged_weight(const CompleteGraph& g, int u, int v,
                             QueryLedger& ledger, Phase phase,
                             std::string_view label) {
  Weight w = g.weight(u, v);
  ledger.charge(phase, label, 1);
  return w;
}

// Text format: "complete <n>" or "bipartite <n1> <n2>" header, then
// "u v w" lines (w decimal or "inf"). Bipartite vertices are global ids:
// V1 is 0..n1-1, V2 is n1..n1+n2-1. Missing pairs load as inf.
AnyGraph load_graph(std::istream& in);
AnyGraph load_graph_file(const std::string& path);
void save_graph(const AnyGraph& g, std::ostream& out);
void save_graph_file(const AnyGraph& g, const std::string& path);

}  // namespace qgraph
