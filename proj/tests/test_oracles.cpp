#include <doctest.h>

#include <cmath>

#include "qgraph/graph.hpp"
#include "qgraph/oracles.hpp"
#include "qgraph/spanning_tree.hpp"

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

TEST_CASE("floyd-warshall on a single vertex") {
  CompleteGraph g(1);
  oracles::DistanceMatrix m = oracles::floyd_warshall(g);
  CHECK(m.n == 1);
  CHECK(m.at(0, 0) == 0.0);
}

TEST_CASE("floyd-warshall routes through the cheap middle vertex") {
  oracles::DistanceMatrix m = oracles::floyd_warshall(example3());
  CHECK(m.at(0, 0) == 0.0);
  CHECK(m.at(0, 1) == 5.0);
  CHECK(m.at(0, 2) == 6.0);
  CHECK(oracles::diameter_of(m) == 6.0);
}

TEST_CASE("floyd-warshall distances satisfy the triangle inequality") {
  for (int s = 0; s < 50; ++s) {
    GraphGenSpec spec;
    spec.n = 16;
    spec.seed = 9000 + s;
    CompleteGraph g = generate_complete(spec);
    oracles::DistanceMatrix m = oracles::floyd_warshall(g);
    for (int u = 0; u < 16; ++u) {
      for (int v = 0; v < 16; ++v) {
        CHECK(m.at(u, v) <= g.weight_value(u, v));
        for (int w = 0; w < 16; ++w) {
          CHECK(m.at(u, v) <= m.at(u, w) + m.at(w, v) + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("kruskal handles the two-vertex graph") {
  CompleteGraph g(2);
  g.set_weight(0, 1, Weight(2.5));
  g.set_weight(1, 0, Weight(2.5));
  TreeResult t = oracles::kruskal_mst(g);
  CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(t.total_weight == Weight(2.5));
}

TEST_CASE("kruskal matches prim on a small graph") {
  GraphGenSpec spec;
  spec.n = 4;
  spec.seed = 11;
  spec.symmetric = true;
  CompleteGraph g = generate_complete(spec);
  TreeResult k = oracles::kruskal_mst(g);
  QueryLedger ledger;
  TreeResult p = prim_classic(g, 0, FinderMode::classical(), ledger);
  CHECK(k.edges == p.edges);
  CHECK(k.total_weight == p.total_weight);
}

TEST_CASE("kruskal matches the exhaustive tree enumeration at n=5") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    GraphGenSpec spec;
    spec.n = 5;
    spec.seed = 1234 + seed;
    spec.symmetric = true;
    CompleteGraph g = generate_complete(spec);
    CHECK(oracles::kruskal_mst(g).total_weight.value() ==
          oracles::exhaustive_mst_weight(g));
  }
}

TEST_CASE("brute force paths on trivial and small graphs") {
  CompleteGraph one(1);
  PathTable t1 = oracles::brute_force_paths(one, 0);
  CHECK(t1.lambda == std::vector<Weight>{Weight(0.0)});

  PathTable t3 = oracles::brute_force_paths(example3(), 0);
  CHECK(t3.lambda == std::vector<Weight>{Weight(0.0), Weight(5.0), Weight(6.0)});
}

TEST_CASE("brute force agrees with floyd-warshall on random graphs") {
  for (int s = 0; s < 100; ++s) {
    GraphGenSpec spec;
    spec.n = 2 + s % 6;
    spec.seed = 20000 + s;
    CompleteGraph g = generate_complete(spec);
    oracles::DistanceMatrix m = oracles::floyd_warshall(g);
    PathTable t = oracles::brute_force_paths(g, 0);
    for (int v = 0; v < spec.n; ++v) CHECK(t.lambda[v].value() == m.at(0, v));
  }
}

TEST_CASE("bipartite floyd-warshall agrees with the digraph embedding") {
  GraphGenSpec spec;
  spec.shape = GraphShape::Bipartite;
  spec.n1 = 3;
  spec.n2 = 4;
  spec.seed = 42;
  BipartiteGraph g = generate_bipartite(spec);
  oracles::DistanceMatrix direct = oracles::floyd_warshall(g);
  oracles::DistanceMatrix embedded = oracles::floyd_warshall(oracles::bipartite_as_digraph(g));
  REQUIRE(direct.n == embedded.n);
  for (int u = 0; u < direct.n; ++u) {
    for (int v = 0; v < direct.n; ++v) CHECK(direct.at(u, v) == embedded.at(u, v));
  }
}

TEST_CASE("oracle preconditions are enforced") {
  GraphGenSpec spec;
  spec.n = 5;
  spec.seed = 3;
  CompleteGraph asym = generate_complete(spec);  // asymmetric by default
  CHECK_THROWS(oracles::kruskal_mst(asym));

  GraphGenSpec big;
  big.n = 9;
  big.seed = 3;
  CHECK_THROWS(oracles::brute_force_paths(generate_complete(big), 0));
  big.symmetric = true;
  CHECK_THROWS(oracles::exhaustive_mst_weight(generate_complete(big)));
}
