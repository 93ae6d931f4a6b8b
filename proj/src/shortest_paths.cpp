#include "qgraph/shortest_paths.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qgraph {

namespace {

void require_complete(const CompleteGraph& g) {
  if (g.has_infinite_edge()) {
    throw std::invalid_argument("algorithm requires a complete graph (no inf edges)");
  }
}

void require_source(int v0, int n) {
  if (v0 < 0 || v0 >= n) throw std::out_of_range("source vertex out of range");
}

std::vector<int> others(int n, int v0) {
  std::vector<int> vs;
  vs.reserve(n - 1);
  for (int v = 0; v < n; ++v) {
    if (v != v0) vs.push_back(v);
  }
  return vs;
}

}  // namespace

PathTable dijkstra_classic(const CompleteGraph& g, int v0, FinderMode mode,
                           QueryLedger& ledger) {
  const int n = g.size();
  require_source(v0, n);
  require_complete(g);

  PathTable t;
  t.source = v0;
  t.lambda.assign(n, Weight::infinity());
  t.pred.assign(n, std::nullopt);
  t.lambda[v0] = Weight(0.0);
  t.settle_order.push_back(v0);

  std::vector<double> lambda(n, 0.0);
  for (int v = 0; v < n; ++v) {
    if (v != v0) {
      lambda[v] = g.weight_value(v0, v);
      t.pred[v] = v0;
    }
  }

  Finder finder(mode);
  std::vector<int> unsettled = others(n, v0);
  while (!unsettled.empty()) {
    MinResult r = finder.find_min(
        unsettled.size(), [&](std::size_t i) { return lambda[unsettled[i]]; },
        ledger, Phase::Search, "search");
    int w = unsettled[r.index];
    unsettled.erase(unsettled.begin() + static_cast<std::ptrdiff_t>(r.index));
    t.lambda[w] = Weight(r.key);
    t.settle_order.push_back(w);

    for (int v : unsettled) {
      double d = r.key + charged_weight(g, w, v, ledger, Phase::Update, "update").value();
      if (d < lambda[v]) {
        lambda[v] = d;
        t.pred[v] = w;
      }
    }
  }
  return t;
}

PathTable dijkstra_no_update(const CompleteGraph& g, int v0, FinderMode mode,
                             QueryLedger& ledger) {
  const int n = g.size();
  require_source(v0, n);
  require_complete(g);

  PathTable t;
  t.source = v0;
  t.lambda.assign(n, Weight::infinity());
  t.pred.assign(n, std::nullopt);
  t.lambda[v0] = Weight(0.0);
  t.settle_order.push_back(v0);

  std::vector<double> lambda(n, std::numeric_limits<double>::infinity());
  lambda[v0] = 0.0;

  Finder finder(mode);
  std::vector<int> settled{v0};
  std::vector<int> unsettled = others(n, v0);
  while (!unsettled.empty()) {
    const std::size_t u_count = unsettled.size();
    MinResult r = finder.find_min(
        settled.size() * u_count,
        [&](std::size_t i) {
          int w = settled[i / u_count];
          int v = unsettled[i % u_count];
          return lambda[w] + g.weight_value(w, v);
        },
        ledger, Phase::Search, "search");
    int w = settled[r.index / u_count];
    int v = unsettled[r.index % u_count];
    unsettled.erase(unsettled.begin() + static_cast<std::ptrdiff_t>(r.index % u_count));
    settled.push_back(v);
    lambda[v] = r.key;
    t.lambda[v] = Weight(r.key);
    t.pred[v] = w;
    t.settle_order.push_back(v);
  }
  return t;
}

PathTable dijkstra_periodic(const CompleteGraph& g, int v0, int k,
                            FinderMode mode, QueryLedger& ledger) {
  if (k < 1) throw std::invalid_argument("flush period k must be >= 1");
  const int n = g.size();
  require_source(v0, n);
  require_complete(g);

  PathTable t;
  t.source = v0;
  t.lambda.assign(n, Weight::infinity());
  t.pred.assign(n, std::nullopt);
  t.lambda[v0] = Weight(0.0);
  t.settle_order.push_back(v0);

  // lambda holds exact values for settled vertices and possibly stale upper
  // bounds for the rest; bounds are refreshed only at flushes.
  std::vector<double> lambda(n, 0.0);
  for (int v = 0; v < n; ++v) {
    if (v != v0) {
      lambda[v] = g.weight_value(v0, v);
      t.pred[v] = v0;
    }
  }

  Finder finder(mode);
  std::vector<int> flush_set{v0};  // T, v0 always kept
  std::vector<int> unsettled = others(n, v0);
  while (!unsettled.empty()) {
    const std::size_t u_count = unsettled.size();
    MinResult pair_min = finder.find_min(
        flush_set.size() * u_count,
        [&](std::size_t i) {
          int w = flush_set[i / u_count];
          int v = unsettled[i % u_count];
          return lambda[w] + g.weight_value(w, v);
        },
        ledger, Phase::Search, "search");
    MinResult scan_min = finder.find_min(
        u_count, [&](std::size_t i) { return lambda[unsettled[i]]; }, ledger,
        Phase::Search, "scan");

    int settled_v;
    if (pair_min.key <= scan_min.key) {
      int w = flush_set[pair_min.index / u_count];
      settled_v = unsettled[pair_min.index % u_count];
      unsettled.erase(unsettled.begin() +
                      static_cast<std::ptrdiff_t>(pair_min.index % u_count));
      lambda[settled_v] = pair_min.key;
      t.pred[settled_v] = w;
    } else {
      settled_v = unsettled[scan_min.index];
      unsettled.erase(unsettled.begin() + static_cast<std::ptrdiff_t>(scan_min.index));
    }
    flush_set.push_back(settled_v);
    t.lambda[settled_v] = Weight(lambda[settled_v]);
    t.settle_order.push_back(settled_v);

    if (static_cast<int>(flush_set.size()) >= k) {
      for (int v : unsettled) {
        MinResult r = finder.find_min(
            flush_set.size(),
            [&](std::size_t i) {
              int w = flush_set[i];
              return lambda[w] + g.weight_value(w, v);
            },
            ledger, Phase::Update, "flush");
        if (r.key < lambda[v]) {
          lambda[v] = r.key;
          t.pred[v] = flush_set[r.index];
        }
      }
      flush_set.assign(1, v0);
    }
  }
  return t;
}

BipartitePathTable bipartite_partial(const BipartiteGraph& g, int v0,
                                     FinderMode mode, QueryLedger& ledger) {
  const int n1 = g.size1();
  const int n2 = g.size2();
  if (v0 < 0 || v0 >= n1) throw std::out_of_range("source must lie in V1");
  if (g.has_infinite_edge()) {
    throw std::invalid_argument("algorithm requires a complete bipartite graph");
  }

  BipartitePathTable t;
  t.source = v0;
  t.lambda1.assign(n1, Weight::infinity());
  t.pred1.assign(n1, std::nullopt);
  t.lambda1[v0] = Weight(0.0);

  std::vector<double> lambda1(n1, std::numeric_limits<double>::infinity());
  lambda1[v0] = 0.0;

  Finder finder(mode);

  // Initial two-hop bounds through any V2 vertex.
  for (int v = 0; v < n1; ++v) {
    if (v == v0) continue;
    MinResult r = finder.find_min(
        static_cast<std::size_t>(n2),
        [&](std::size_t m) {
          return g.weight1_value(v0, static_cast<int>(m)) +
                 g.weight2_value(static_cast<int>(m), v);
        },
        ledger, Phase::Search, "init");
    lambda1[v] = r.key;
    t.pred1[v] = std::make_pair(v0, static_cast<int>(r.index));
  }

  std::vector<int> settled{v0};
  std::vector<int> unsettled = others(n1, v0);
  while (!unsettled.empty()) {
    const std::size_t u_count = unsettled.size();
    const std::size_t mid_block = static_cast<std::size_t>(n2) * u_count;
    MinResult r = finder.find_min(
        settled.size() * mid_block,
        [&](std::size_t i) {
          int u = settled[i / mid_block];
          std::size_t rem = i % mid_block;
          int mid = static_cast<int>(rem / u_count);
          int w = unsettled[rem % u_count];
          return lambda1[u] + g.weight1_value(u, mid) + g.weight2_value(mid, w);
        },
        ledger, Phase::Search, "search");
    int u = settled[r.index / mid_block];
    std::size_t rem = r.index % mid_block;
    int mid = static_cast<int>(rem / u_count);
    int w = unsettled[rem % u_count];
    unsettled.erase(unsettled.begin() + static_cast<std::ptrdiff_t>(rem % u_count));
    settled.push_back(w);
    lambda1[w] = r.key;
    t.lambda1[w] = Weight(r.key);
    t.pred1[w] = std::make_pair(u, mid);

    for (int v : unsettled) {
      MinResult rc = finder.find_min(
          static_cast<std::size_t>(n2),
          [&](std::size_t m) {
            return lambda1[w] + g.weight1_value(w, static_cast<int>(m)) +
                   g.weight2_value(static_cast<int>(m), v);
          },
          ledger, Phase::Update, "update");
      if (rc.key < lambda1[v]) {
        lambda1[v] = rc.key;
        t.pred1[v] = std::make_pair(w, static_cast<int>(rc.index));
      }
    }
  }

  // Final stage: every V2 distance is one V1 hop away from a settled vertex.
  t.lambda2.assign(n2, Weight::infinity());
  t.pred2.assign(n2, v0);
  for (int u2 = 0; u2 < n2; ++u2) {
    MinResult r = finder.find_min(
        static_cast<std::size_t>(n1),
        [&](std::size_t w) {
          return lambda1[w] + g.weight1_value(static_cast<int>(w), u2);
        },
        ledger, Phase::Search, "final");
    t.lambda2[u2] = Weight(r.key);
    t.pred2[u2] = static_cast<int>(r.index);
  }
  return t;
}

std::vector<int> reconstruct_path(const PathTable& table, int v) {
  const int n = static_cast<int>(table.lambda.size());
  if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
  std::vector<int> path;
  for (int cur = v;;) {
    path.push_back(cur);
    if (cur == table.source) break;
    if (!table.pred[cur]) throw std::logic_error("broken predecessor chain");
    cur = *table.pred[cur];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> reconstruct_path(const BipartitePathTable& table, int n1, int global_v) {
  const int n2 = static_cast<int>(table.lambda2.size());
  if (global_v < 0 || global_v >= n1 + n2) throw std::out_of_range("vertex out of range");

  std::vector<int> path;
  int v1;
  if (global_v >= n1) {
    path.push_back(global_v);
    v1 = table.pred2[global_v - n1];
  } else {
    v1 = global_v;
  }
  while (v1 != table.source) {
    const auto& p = table.pred1[v1];
    if (!p) throw std::logic_error("broken predecessor chain");
    path.push_back(v1);
    path.push_back(n1 + p->second);
    v1 = p->first;
  }
  path.push_back(table.source);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace qgraph
