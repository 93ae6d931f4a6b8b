#pragma once

#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/shortest_paths.hpp"
#include "qgraph/spanning_tree.hpp"
#include "qgraph/weight.hpp"

namespace qgraph {

// Ground-truth implementations for tests and the verify command. None of
// these touch the finder or the ledger.
namespace oracles {

struct DistanceMatrix {
  int n = 0;
  std::vector<double> d;  // row-major

  double at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

DistanceMatrix floyd_warshall(const CompleteGraph& g);

// Bipartite graph as a digraph on n1 + n2 vertices (V2 offset by n1) with
// inf intra-part entries.
CompleteGraph bipartite_as_digraph(const BipartiteGraph& g);
DistanceMatrix floyd_warshall(const BipartiteGraph& g);

double diameter_of(const DistanceMatrix& m);

TreeResult kruskal_mst(const CompleteGraph& g);

// Exact distances by enumerating all simple paths; n must stay tiny.
PathTable brute_force_paths(const CompleteGraph& g, int v0, int max_n = 8);

// Minimum spanning tree weight by enumerating all n^(n-2) labeled trees
// (Prufer sequences); n <= 7.
double exhaustive_mst_weight(const CompleteGraph& g);

}  // namespace oracles
}  // namespace qgraph
