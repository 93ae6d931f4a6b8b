#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/ledger.hpp"
#include "qgraph/min_search.hpp"
#include "qgraph/weight.hpp"

namespace qgraph {

// Single-source shortest-path result. pred chains always terminate at the
// source and their edge sums reproduce lambda exactly.
struct PathTable {
  int source = 0;
  std::vector<Weight> lambda;
  std::vector<std::optional<int>> pred;
  std::vector<int> settle_order;  // source first
};

// Bipartite result; V1 vertices carry (previous V1 vertex, intermediate V2
// vertex) predecessor pairs, V2 vertices carry the final V1 hop.
struct BipartitePathTable {
  int source = 0;
  std::vector<Weight> lambda1;
  std::vector<Weight> lambda2;
  std::vector<std::optional<std::pair<int, int>>> pred1;
  std::vector<int> pred2;
};

// Classic Dijkstra: per settled vertex, one min over the frontier plus a
// full relaxation pass charged as update queries.
PathTable dijkstra_classic(const CompleteGraph& g, int v0, FinderMode mode,
                           QueryLedger& ledger);

// No-update variant: one min over all settled x unsettled pairs per step,
// keyed by lambda(w) + v(w,v); no update phase at all.
PathTable dijkstra_no_update(const CompleteGraph& g, int v0, FinderMode mode,
                             QueryLedger& ledger);

// Periodic-update variant: searches T x unsettled plus a frontier scan each
// step, and relaxes everything against T whenever |T| >= k. k interpolates
// between the classic (k=1) and no-update (k=n) behaviors.
PathTable dijkstra_periodic(const CompleteGraph& g, int v0, int k,
                            FinderMode mode, QueryLedger& ledger);

// Partial-update bipartite variant: V1 distances are settled through
// triple-keyed searches over settled x V2 x unsettled; V2 distances are
// filled in one final pass.
BipartitePathTable bipartite_partial(const BipartiteGraph& g, int v0,
                                     FinderMode mode, QueryLedger& ledger);

// Path from the source to v, inclusive.
std::vector<int> reconstruct_path(const PathTable& table, int v);

// Bipartite paths use global ids: V1 is 0..n1-1, V2 is n1..n1+n2-1.
std::vector<int> reconstruct_path(const BipartitePathTable& table, int n1, int global_v);

}  // namespace qgraph
