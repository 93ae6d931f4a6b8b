#include "qgraph/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qgraph {
namespace oracles {

namespace {

// Min-plus closure with intermediate tracking, then every distance is
// recomputed by summing its extracted path left to right. The resummation
// pins the accumulation order to the one the Dijkstra variants use, so
// equal paths give bit-equal distances.
DistanceMatrix floyd_warshall_table(int n, std::vector<double> w) {
  std::vector<double> d = w;
  std::vector<int> via(static_cast<std::size_t>(n) * n, -1);
  for (int mid = 0; mid < n; ++mid) {
    for (int u = 0; u < n; ++u) {
      const double du = d[static_cast<std::size_t>(u) * n + mid];
      for (int v = 0; v < n; ++v) {
        double cand = du + d[static_cast<std::size_t>(mid) * n + v];
        std::size_t i = static_cast<std::size_t>(u) * n + v;
        if (cand < d[i]) {
          d[i] = cand;
          via[i] = mid;
        }
      }
    }
  }

  std::vector<int> path;
  auto collect = [&](auto&& self, int u, int v) -> void {
    int m = via[static_cast<std::size_t>(u) * n + v];
    if (m < 0) {
      path.push_back(v);
    } else {
      self(self, u, m);
      self(self, m, v);
    }
  };

  DistanceMatrix out{n, std::move(d)};
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      std::size_t i = static_cast<std::size_t>(u) * n + v;
      if (u == v || std::isinf(out.d[i])) continue;
      path.clear();
      collect(collect, u, v);
      double total = 0.0;
      int prev = u;
      for (int x : path) {
        total += w[static_cast<std::size_t>(prev) * n + x];
        prev = x;
      }
      out.d[i] = total;
    }
  }
  return out;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

DistanceMatrix floyd_warshall(const CompleteGraph& g) {
  const int n = g.size();
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      d[static_cast<std::size_t>(u) * n + v] = u == v ? 0.0 : g.weight_value(u, v);
    }
  }
  return floyd_warshall_table(n, std::move(d));
}

CompleteGraph bipartite_as_digraph(const BipartiteGraph& g) {
  const int n1 = g.size1(), n2 = g.size2();
  CompleteGraph d(n1 + n2);
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < n2; ++v) {
      d.set_weight(u, n1 + v, g.weight1(u, v));
      d.set_weight(n1 + v, u, g.weight2(v, u));
    }
  }
  return d;  // intra-part pairs stay inf
}

DistanceMatrix floyd_warshall(const BipartiteGraph& g) {
  return floyd_warshall(bipartite_as_digraph(g));
}

double diameter_of(const DistanceMatrix& m) {
  double best = 0.0;
  for (double x : m.d) {
    if (x > best) best = x;
  }
  return best;
}

TreeResult kruskal_mst(const CompleteGraph& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("kruskal requires symmetric weights");
  const int n = g.size();

  struct Edge {
    double w;
    int u, v;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({g.weight_value(u, v), u, v});
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return a.w < b.w; });

  TreeResult t;
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (std::isinf(e.w)) throw std::invalid_argument("kruskal requires finite weights");
    if (sets.unite(e.u, e.v)) {
      t.edges.emplace_back(e.u, e.v);
      if (static_cast<int>(t.edges.size()) == n - 1) break;
    }
  }
  std::sort(t.edges.begin(), t.edges.end());
  // Canonical total: sum over the sorted edge list, so equal trees from
  // different algorithms produce bit-equal weights.
  double total = 0.0;
  for (auto [u, v] : t.edges) total += g.weight_value(u, v);
  t.total_weight = Weight(total);
  return t;
}

PathTable brute_force_paths(const CompleteGraph& g, int v0, int max_n) {
  const int n = g.size();
  if (n > max_n) throw std::invalid_argument("graph too large for brute force");
  if (v0 < 0 || v0 >= n) throw std::out_of_range("source out of range");

  PathTable t;
  t.source = v0;
  t.lambda.assign(n, Weight::infinity());
  t.pred.assign(n, std::nullopt);
  t.lambda[v0] = Weight(0.0);

  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  best[v0] = 0.0;
  std::vector<int> best_pred(n, -1);

  // DFS over every simple path from v0.
  std::vector<bool> on_path(n, false);
  on_path[v0] = true;
  auto dfs = [&](auto&& self, int cur, double dist) -> void {
    for (int v = 0; v < n; ++v) {
      if (on_path[v] || v == cur) continue;
      double d = dist + g.weight_value(cur, v);
      if (std::isinf(d)) continue;
      if (d < best[v]) {
        best[v] = d;
        best_pred[v] = cur;
      }
      on_path[v] = true;
      self(self, v, d);
      on_path[v] = false;
    }
  };
  dfs(dfs, v0, 0.0);

  for (int v = 0; v < n; ++v) {
    if (v == v0) continue;
    t.lambda[v] = Weight(best[v]);
    if (best_pred[v] >= 0) t.pred[v] = best_pred[v];
  }
  return t;
}

double exhaustive_mst_weight(const CompleteGraph& g) {
  const int n = g.size();
  if (n > 7) throw std::invalid_argument("exhaustive tree enumeration capped at n <= 7");
  if (!g.is_symmetric()) throw std::invalid_argument("requires symmetric weights");
  if (n == 1) return 0.0;
  if (n == 2) return g.weight_value(0, 1);

  // Decode every Prufer sequence of length n-2; each labeled tree appears
  // exactly once.
  double best = std::numeric_limits<double>::infinity();
  const int len = n - 2;
  std::vector<int> seq(len, 0);
  std::vector<int> deg(n);
  std::vector<std::pair<int, int>> tree;
  for (;;) {
    std::fill(deg.begin(), deg.end(), 1);
    for (int x : seq) ++deg[x];
    tree.clear();
    for (int x : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      tree.emplace_back(std::min(leaf, x), std::max(leaf, x));
      deg[leaf] = 0;
      --deg[x];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 1) (a < 0 ? a : b) = v;
    }
    tree.emplace_back(std::min(a, b), std::max(a, b));
    // Canonical sorted-edge summation, matching kruskal_mst and the Prim
    // variants, so weights compare exactly.
    std::sort(tree.begin(), tree.end());
    double total = 0.0;
    for (auto [u, v] : tree) total += g.weight_value(u, v);
    if (total < best) best = total;

    int pos = len - 1;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return best;
}

}  // namespace oracles
}  // namespace qgraph
