#pragma once

#include <utility>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/ledger.hpp"
#include "qgraph/min_search.hpp"
#include "qgraph/weight.hpp"

namespace qgraph {

// Spanning tree output. Edges are stored with endpoints sorted ascending
// and the edge list itself sorted, so equal trees compare equal.
// best_weight/best_endpoint keep the final L/M bookkeeping for audit where
// the algorithm maintains it (empty for the no-update variant).
struct TreeResult {
  std::vector<std::pair<int, int>> edges;
  Weight total_weight;
  std::vector<Weight> best_weight;
  std::vector<int> best_endpoint;
  std::vector<int> settle_order;  // start vertex first; empty for oracles
};

// All three require symmetric finite weights; asymmetric input is rejected.
TreeResult prim_classic(const CompleteGraph& g, int v0, FinderMode mode,
                        QueryLedger& ledger);
TreeResult prim_no_update(const CompleteGraph& g, int v0, FinderMode mode,
                          QueryLedger& ledger);
TreeResult prim_periodic(const CompleteGraph& g, int v0, int k, FinderMode mode,
                         QueryLedger& ledger);

}  // namespace qgraph
