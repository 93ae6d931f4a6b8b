#include "qgraph/diameter.hpp"

#include <stdexcept>

#include "qgraph/rng.hpp"

namespace qgraph {

namespace {

int resolve_k(int k, int n) { return k > 0 ? k : static_cast<int>(ceil_sqrt(n)); }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t i) {
  return SplitMix64(base ^ (i + 1) * 0x9e3779b97f4a7c15ULL).next_u64();
}

PathTable run_inner(const CompleteGraph& g, int v0, InnerAlgorithm inner, int k,
                    FinderMode mode, QueryLedger& ledger) {
  if (mode.kind == FinderKind::DHSim) {
    mode.seed = derive_seed(mode.seed, static_cast<std::uint64_t>(v0));
  }
  switch (inner) {
    case InnerAlgorithm::Classic:
      return dijkstra_classic(g, v0, mode, ledger);
    case InnerAlgorithm::NoUpdate:
      return dijkstra_no_update(g, v0, mode, ledger);
    case InnerAlgorithm::Periodic:
      return dijkstra_periodic(g, v0, resolve_k(k, g.size()), mode, ledger);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

EccentricityRecord eccentricity(const CompleteGraph& g, int v0,
                                InnerAlgorithm inner, int k, FinderMode mode,
                                QueryLedger& ledger) {
  QueryLedger sub;
  PathTable t = run_inner(g, v0, inner, k, mode, sub);
  Weight ecc(0.0);
  for (const Weight& w : t.lambda) {
    if (w > ecc) ecc = w;
  }
  ledger.merge(sub);
  return {v0, ecc, sub.total()};
}

DiameterResult diameter(const CompleteGraph& g, InnerAlgorithm inner, int k,
                        FinderMode mode, QueryLedger& ledger) {
  const int n = g.size();

  // Every eccentricity is computed exactly; modes differ in which inner
  // costs reach the caller's ledger.
  std::vector<EccentricityRecord> records;
  records.reserve(n);
  std::uint64_t inner_sum = 0;
  Weight best(0.0);
  for (int v0 = 0; v0 < n; ++v0) {
    QueryLedger scratch;
    EccentricityRecord rec = eccentricity(g, v0, inner, k, mode, scratch);
    inner_sum += rec.inner_cost;
    if (rec.ecc > best) best = rec.ecc;
    records.push_back(rec);
  }

  DiameterResult result;
  result.diameter = best;

  switch (mode.kind) {
    case FinderKind::Classical:
      result.outer_charge = inner_sum;
      break;
    case FinderKind::IdealQuantum: {
      // ceil(ceil(sqrt(n)) * mean inner cost), in exact integer arithmetic.
      std::uint64_t sqrt_n = ceil_sqrt(static_cast<std::uint64_t>(n));
      result.outer_charge = (sqrt_n * inner_sum + n - 1) / n;
      break;
    }
    case FinderKind::DHSim: {
      // Threshold trajectory over eccentricities (a maximum search); only
      // starts the trajectory visits are accounted, each at most once.
      SplitMix64 rng(derive_seed(mode.seed, 0));
      std::vector<bool> charged(n, false);
      std::uint64_t total = 0;
      auto visit = [&](int v0) {
        if (!charged[v0]) {
          charged[v0] = true;
          total += records[v0].inner_cost;
        }
      };
      int y = static_cast<int>(rng.next_below(n));
      visit(y);
      std::vector<int> better;
      for (;;) {
        better.clear();
        for (int i = 0; i < n; ++i) {
          if (records[i].ecc > records[y].ecc) better.push_back(i);
        }
        if (better.empty()) break;
        y = better[rng.next_below(better.size())];
        visit(y);
      }
      result.outer_charge = total;
      break;
    }
  }
  ledger.charge(Phase::Search, "outer", result.outer_charge);
  result.records = std::move(records);
  return result;
}

}  // namespace qgraph
