#include <doctest.h>

#include "qgraph/diameter.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/oracles.hpp"

using namespace qgraph;

namespace {

CompleteGraph example3() {
  CompleteGraph g(3);
  auto set = [&](int u, int v, double w) {
    g.set_weight(u, v, Weight(w));
    g.set_weight(v, u, Weight(w));
  };
  set(0, 1, 5);
  set(1, 2, 1);
  set(0, 2, 7);
  return g;
}

}  // namespace

TEST_CASE("single vertex has eccentricity zero") {
  CompleteGraph g(1);
  QueryLedger ledger;
  EccentricityRecord r =
      eccentricity(g, 0, InnerAlgorithm::Classic, 0, FinderMode::classical(), ledger);
  CHECK(r.ecc == Weight(0.0));
  CHECK(r.inner_cost == 0);
}

TEST_CASE("three-vertex example eccentricity") {
  CompleteGraph g = example3();
  QueryLedger ledger;
  EccentricityRecord r =
      eccentricity(g, 0, InnerAlgorithm::Classic, 0, FinderMode::classical(), ledger);
  CHECK(r.ecc == Weight(6.0));
  CHECK(ledger.total() == r.inner_cost);
}

TEST_CASE("two-vertex directed diameter is the larger arc") {
  CompleteGraph g(2);
  g.set_weight(0, 1, Weight(0.25));
  g.set_weight(1, 0, Weight(0.75));
  QueryLedger ledger;
  DiameterResult r =
      diameter(g, InnerAlgorithm::Classic, 0, FinderMode::classical(), ledger);
  CHECK(r.diameter == Weight(0.75));
}

TEST_CASE("the last settled vertex attains the eccentricity") {
  for (int seed = 0; seed < 100; ++seed) {
    GraphGenSpec spec;
    spec.n = 10 + seed % 14;
    spec.seed = 3000 + seed;
    CompleteGraph g = generate_complete(spec);
    QueryLedger ledger;
    PathTable t = dijkstra_classic(g, 0, FinderMode::classical(), ledger);
    Weight ecc(0.0);
    for (const Weight& w : t.lambda) ecc = std::max(ecc, w);
    CHECK(t.lambda[t.settle_order.back()] == ecc);
  }
}

TEST_CASE("diameter equals the Floyd-Warshall oracle in every mode") {
  for (int seed = 0; seed < 12; ++seed) {
    GraphGenSpec spec;
    spec.n = 2 + (seed * 5) % 30;
    spec.seed = 4000 + seed;
    CompleteGraph g = generate_complete(spec);
    double expect = oracles::diameter_of(oracles::floyd_warshall(g));
    for (InnerAlgorithm inner :
         {InnerAlgorithm::Classic, InnerAlgorithm::NoUpdate, InnerAlgorithm::Periodic}) {
      for (FinderMode mode : {FinderMode::classical(), FinderMode::ideal_quantum(),
                              FinderMode::dh_sim(seed)}) {
        QueryLedger ledger;
        DiameterResult r = diameter(g, inner, 0, mode, ledger);
        CHECK(r.diameter.value() == expect);
      }
    }
  }
}

TEST_CASE("diameter is the maximum of the per-start eccentricities") {
  GraphGenSpec spec;
  spec.n = 18;
  spec.seed = 555;
  CompleteGraph g = generate_complete(spec);
  QueryLedger ledger;
  DiameterResult r =
      diameter(g, InnerAlgorithm::Periodic, 0, FinderMode::classical(), ledger);
  Weight best(0.0);
  for (const EccentricityRecord& rec : r.records) best = std::max(best, rec.ecc);
  CHECK(r.diameter == best);
  CHECK(static_cast<int>(r.records.size()) == 18);
}

TEST_CASE("ideal-quantum outer charge follows the sqrt(n) x mean-inner law") {
  GraphGenSpec spec;
  spec.n = 23;
  spec.seed = 808;
  CompleteGraph g = generate_complete(spec);
  QueryLedger ledger;
  DiameterResult r =
      diameter(g, InnerAlgorithm::Periodic, 0, FinderMode::ideal_quantum(), ledger);
  std::uint64_t inner_sum = 0;
  for (const EccentricityRecord& rec : r.records) inner_sum += rec.inner_cost;
  std::uint64_t sqrt_n = ceil_sqrt(23);
  CHECK(r.outer_charge == (sqrt_n * inner_sum + 23 - 1) / 23);
  CHECK(ledger.total() == r.outer_charge);
}

TEST_CASE("classical outer charge is the sum of all inner runs") {
  GraphGenSpec spec;
  spec.n = 9;
  spec.seed = 7;
  CompleteGraph g = generate_complete(spec);
  QueryLedger ledger;
  DiameterResult r =
      diameter(g, InnerAlgorithm::Classic, 0, FinderMode::classical(), ledger);
  std::uint64_t inner_sum = 0;
  for (const EccentricityRecord& rec : r.records) inner_sum += rec.inner_cost;
  CHECK(r.outer_charge == inner_sum);
  CHECK(ledger.total() == inner_sum);
}

TEST_CASE("dh-sim outer charge never exceeds the full sum and stays exact") {
  GraphGenSpec spec;
  spec.n = 16;
  spec.seed = 99;
  CompleteGraph g = generate_complete(spec);
  double expect = oracles::diameter_of(oracles::floyd_warshall(g));
  for (int s = 0; s < 10; ++s) {
    QueryLedger ledger;
    DiameterResult r =
        diameter(g, InnerAlgorithm::Periodic, 0, FinderMode::dh_sim(s), ledger);
    CHECK(r.diameter.value() == expect);
    std::uint64_t inner_sum = 0;
    for (const EccentricityRecord& rec : r.records) inner_sum += rec.inner_cost;
    CHECK(r.outer_charge <= inner_sum);
    CHECK(r.outer_charge > 0);
  }
}
