#pragma once

#include <cstdint>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/ledger.hpp"
#include "qgraph/min_search.hpp"
#include "qgraph/shortest_paths.hpp"
#include "qgraph/weight.hpp"

namespace qgraph {

enum class InnerAlgorithm { Classic, NoUpdate, Periodic };

struct EccentricityRecord {
  int v0 = 0;
  Weight ecc;
  std::uint64_t inner_cost = 0;
};

struct DiameterResult {
  Weight diameter;
  // What the outer maximum-finding contributed to the ledger.
  std::uint64_t outer_charge = 0;
  std::vector<EccentricityRecord> records;
};

// Runs the chosen inner algorithm from v0 and takes the largest distance.
// Inner queries are charged to the ledger. k applies to Periodic only;
// k == 0 means auto (ceil(sqrt(n))).
EccentricityRecord eccentricity(const CompleteGraph& g, int v0,
                                InnerAlgorithm inner, int k, FinderMode mode,
                                QueryLedger& ledger);

// Maximum eccentricity over all start vertices. The value is exact in every
// mode; modes differ only in accounting:
//  - Classical charges every inner run.
//  - IdealQuantum charges ceil(ceil(sqrt(n)) * mean inner cost).
//  - DHSim charges the inner runs its threshold trajectory actually
//    evaluates, each distinct start at most once.
DiameterResult diameter(const CompleteGraph& g, InnerAlgorithm inner, int k,
                        FinderMode mode, QueryLedger& ledger);

}  // namespace qgraph
