#include "qgraph/spanning_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgraph {

namespace {

void require_mst_input(const CompleteGraph& g, int v0) {
  if (v0 < 0 || v0 >= g.size()) throw std::out_of_range("start vertex out of range");
  if (g.has_infinite_edge()) {
    throw std::invalid_argument("spanning tree requires a complete graph");
  }
  if (!g.is_symmetric()) {
    throw std::invalid_argument("spanning tree requires symmetric weights");
  }
}

void add_edge(TreeResult& t, int a, int b) {
  t.edges.emplace_back(std::min(a, b), std::max(a, b));
}

// Canonical total: left-to-right sum over the sorted edge list, so all
// algorithms (and the Kruskal oracle) report bit-equal weights for equal
// trees.
void finalize(TreeResult& t, const CompleteGraph& g) {
  std::sort(t.edges.begin(), t.edges.end());
  double total = 0.0;
  for (auto [u, v] : t.edges) total += g.weight_value(u, v);
  t.total_weight = Weight(total);
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

TreeResult prim_classic(const CompleteGraph& g, int v0, FinderMode mode,
                        QueryLedger& ledger) {
  require_mst_input(g, v0);
  const int n = g.size();

  TreeResult t;
  t.settle_order.push_back(v0);
  std::vector<double> best(n, 0.0);
  std::vector<int> endpoint(n, v0);
  for (int v = 0; v < n; ++v) {
    if (v != v0) best[v] = g.weight_value(v0, v);
  }

  Finder finder(mode);
  std::vector<int> unsettled = others(n, v0);
  while (!unsettled.empty()) {
    MinResult r = finder.find_min(
        unsettled.size(), [&](std::size_t i) { return best[unsettled[i]]; },
        ledger, Phase::Search, "search");
    int w = unsettled[r.index];
    unsettled.erase(unsettled.begin() + static_cast<std::ptrdiff_t>(r.index));
    add_edge(t, w, endpoint[w]);
    t.settle_order.push_back(w);

    for (int v : unsettled) {
      double wv = charged_weight(g, w, v, ledger, Phase::Update, "update").value();
      if (wv < best[v]) {
        best[v] = wv;
        endpoint[v] = w;
      }
    }
  }
  finalize(t, g);
  t.best_weight.reserve(n);
  for (int v = 0; v < n; ++v) t.best_weight.push_back(Weight(v == v0 ? 0.0 : best[v]));
  t.best_endpoint = std::move(endpoint);
  return t;
}

TreeResult prim_no_update(const CompleteGraph& g, int v0, FinderMode mode,
                          QueryLedger& ledger) {
  require_mst_input(g, v0);
  const int n = g.size();

  TreeResult t;
  Finder finder(mode);
  std::vector<int> settled{v0};
  std::vector<int> unsettled = others(n, v0);
  while (!unsettled.empty()) {
    const std::size_t u_count = unsettled.size();
    MinResult r = finder.find_min(
        settled.size() * u_count,
        [&](std::size_t i) {
          return g.weight_value(settled[i / u_count], unsettled[i % u_count]);
        },
        ledger, Phase::Search, "search");
    int u = settled[r.index / u_count];
    int v = unsettled[r.index % u_count];
    unsettled.erase(unsettled.begin() + static_cast<std::ptrdiff_t>(r.index % u_count));
    settled.push_back(v);
    add_edge(t, u, v);
  }
  finalize(t, g);
  return t;
}

TreeResult prim_periodic(const CompleteGraph& g, int v0, int k, FinderMode mode,
                         QueryLedger& ledger) {
  if (k < 1) throw std::invalid_argument("flush period k must be >= 1");
  require_mst_input(g, v0);
  const int n = g.size();

  TreeResult t;
  t.settle_order.push_back(v0);
  // Stale-upper-bound connection weights, refreshed against T at flushes.
  std::vector<double> best(n, 0.0);
  std::vector<int> endpoint(n, v0);
  for (int v = 0; v < n; ++v) {
    if (v != v0) best[v] = g.weight_value(v0, v);
  }

  Finder finder(mode);
  std::vector<int> flush_set{v0};
  std::vector<int> unsettled = others(n, v0);
  while (!unsettled.empty()) {
    const std::size_t u_count = unsettled.size();
    MinResult pair_min = finder.find_min(
        flush_set.size() * u_count,
        [&](std::size_t i) {
          return g.weight_value(flush_set[i / u_count], unsettled[i % u_count]);
        },
        ledger, Phase::Search, "search");
    MinResult scan_min = finder.find_min(
        u_count, [&](std::size_t i) { return best[unsettled[i]]; }, ledger,
        Phase::Search, "scan");

    int settled_v;
    if (scan_min.key <= pair_min.key) {
      settled_v = unsettled[scan_min.index];
      unsettled.erase(unsettled.begin() + static_cast<std::ptrdiff_t>(scan_min.index));
      add_edge(t, settled_v, endpoint[settled_v]);
    } else {
      int u = flush_set[pair_min.index / u_count];
      settled_v = unsettled[pair_min.index % u_count];
      unsettled.erase(unsettled.begin() +
                      static_cast<std::ptrdiff_t>(pair_min.index % u_count));
      add_edge(t, u, settled_v);
    }
    flush_set.push_back(settled_v);
    t.settle_order.push_back(settled_v);

    if (static_cast<int>(flush_set.size()) >= k) {
      for (int v : unsettled) {
        MinResult r = finder.find_min(
            flush_set.size(),
            [&](std::size_t i) { return g.weight_value(flush_set[i], v); },
            ledger, Phase::Update, "flush");
        if (r.key < best[v]) {
          best[v] = r.key;
          endpoint[v] = flush_set[r.index];
        }
      }
      flush_set.assign(1, v0);
    }
  }
  finalize(t, g);
  t.best_weight.reserve(n);
  for (int v = 0; v < n; ++v) t.best_weight.push_back(Weight(v == v0 ? 0.0 : best[v]));
  t.best_endpoint = std::move(endpoint);
  return t;
}

}  // namespace qgraph
