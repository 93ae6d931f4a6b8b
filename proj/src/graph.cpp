#include "qgraph/graph.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qgraph/rng.hpp"

namespace qgraph {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

std::string format_weight(double w) {
  if (std::isinf(w)) return "inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, w);  // shortest round-trip
  return std::string(buf, res.ptr);
}

double parse_weight(const std::string& tok) {
  if (tok == "inf") return std::numeric_limits<double>::infinity();
  double w;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), w);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    fail("malformed weight token: " + tok);
  }
  return w;
}

}  // namespace

CompleteGraph::CompleteGraph(int n)
    : n_(n),
      table_(n > 0 ? static_cast<std::size_t>(n) * n : 0,
             std::numeric_limits<double>::infinity()) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  for (int v = 0; v < n_; ++v) table_[idx(v, v)] = 0.0;
}

void CompleteGraph::check_pair(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw std::out_of_range("vertex out of range");
  }
  if (u == v) throw std::invalid_argument("self-loop query is not allowed");
}

Weight CompleteGraph::weight(int u, int v) const {
  check_pair(u, v);
  return Weight(table_[idx(u, v)]);
}

void CompleteGraph::set_weight(int u, int v, Weight w) {
  check_pair(u, v);
  table_[idx(u, v)] = w.value();
}

bool CompleteGraph::has_infinite_edge() const {
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u != v && std::isinf(table_[idx(u, v)])) return true;
    }
  }
  return false;
}

bool CompleteGraph::is_symmetric() const {
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (table_[idx(u, v)] != table_[idx(v, u)]) return false;
    }
  }
  return true;
}

BipartiteGraph::BipartiteGraph(int n1, int n2)
    : n1_(n1),
      n2_(n2),
      forward_(n1 > 0 && n2 > 0 ? static_cast<std::size_t>(n1) * n2 : 0,
               std::numeric_limits<double>::infinity()),
      backward_(forward_.size(), std::numeric_limits<double>::infinity()) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("bipartite parts need size >= 1");
}

Weight BipartiteGraph::weight1(int u, int v) const {
  if (u < 0 || u >= n1_ || v < 0 || v >= n2_) throw std::out_of_range("vertex out of range");
  return Weight(forward_[static_cast<std::size_t>(u) * n2_ + v]);
}

void BipartiteGraph::set_weight1(int u, int v, Weight w) {
  if (u < 0 || u >= n1_ || v < 0 || v >= n2_) throw std::out_of_range("vertex out of range");
  forward_[static_cast<std::size_t>(u) * n2_ + v] = w.value();
}

Weight BipartiteGraph::weight2(int u, int v) const {
  if (u < 0 || u >= n2_ || v < 0 || v >= n1_) throw std::out_of_range("vertex out of range");
  return Weight(backward_[static_cast<std::size_t>(u) * n1_ + v]);
}

void BipartiteGraph::set_weight2(int u, int v, Weight w) {
  if (u < 0 || u >= n2_ || v < 0 || v >= n1_) throw std::out_of_range("vertex out of range");
  backward_[static_cast<std::size_t>(u) * n1_ + v] = w.value();
}

bool BipartiteGraph::has_infinite_edge() const {
  for (double w : forward_) {
    if (std::isinf(w)) return true;
  }
  for (double w : backward_) {
    if (std::isinf(w)) return true;
  }
  return false;
}

CompleteGraph generate_complete(const GraphGenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
  CompleteGraph g(spec.n);
  SplitMix64 rng(spec.seed);
  if (spec.symmetric) {
    for (int u = 0; u < spec.n; ++u) {
      for (int v = u + 1; v < spec.n; ++v) {
        Weight w(rng.next_unit_open_low());
        g.set_weight(u, v, w);
        g.set_weight(v, u, w);
      }
    }
  } else {
    for (int u = 0; u < spec.n; ++u) {
      for (int v = 0; v < spec.n; ++v) {
        if (u != v) g.set_weight(u, v, Weight(rng.next_unit_open_low()));
      }
    }
  }
  return g;
}

BipartiteGraph generate_bipartite(const GraphGenSpec& spec) {
  if (spec.n1 < 1 || spec.n2 < 1) throw std::invalid_argument("generate: part sizes must be >= 1");
  BipartiteGraph g(spec.n1, spec.n2);
  SplitMix64 rng(spec.seed);
  for (int u = 0; u < spec.n1; ++u) {
    for (int v = 0; v < spec.n2; ++v) {
      g.set_weight1(u, v, Weight(rng.next_unit_open_low()));
    }
  }
  for (int u = 0; u < spec.n2; ++u) {
    for (int v = 0; v < spec.n1; ++v) {
      g.set_weight2(u, v, Weight(rng.next_unit_open_low()));
    }
  }
  return g;
}

AnyGraph generate(const GraphGenSpec& spec) {
  if (spec.shape == GraphShape::Complete) return generate_complete(spec);
  return generate_bipartite(spec);
}

AnyGraph load_graph(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) fail("empty graph file");
  std::istringstream hs(header);
  std::string kind;
  hs >> kind;

  auto read_edges = [&](auto apply) {
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      int u, v;
      std::string tok;
      if (!(ls >> u)) continue;  // blank line
      if (!(ls >> v >> tok)) fail("malformed edge at line " + std::to_string(lineno));
      std::string extra;
      if (ls >> extra) fail("trailing tokens at line " + std::to_string(lineno));
      double w = parse_weight(tok);
      if (w < 0.0 || std::isnan(w)) fail("negative weight at line " + std::to_string(lineno));
      apply(u, v, w, lineno);
    }
  };

  if (kind == "complete") {
    int n;
    if (!(hs >> n) || n < 1) fail("bad complete header");
    CompleteGraph g(n);
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    read_edges([&](int u, int v, double w, int lineno) {
      if (u < 0 || u >= n || v < 0 || v >= n) {
        fail("vertex out of range for declared size at line " + std::to_string(lineno));
      }
      if (u == v) fail("self-loop at line " + std::to_string(lineno));
      std::size_t i = static_cast<std::size_t>(u) * n + v;
      if (seen[i]) fail("duplicate edge at line " + std::to_string(lineno));
      seen[i] = true;
      g.set_weight(u, v, Weight(w));
    });
    return g;
  }
  if (kind == "bipartite") {
    int n1, n2;
    if (!(hs >> n1 >> n2) || n1 < 1 || n2 < 1) fail("bad bipartite header");
    BipartiteGraph g(n1, n2);
    std::vector<bool> seen(2 * static_cast<std::size_t>(n1) * n2, false);
    read_edges([&](int u, int v, double w, int lineno) {
      bool u1 = u >= 0 && u < n1, v1 = v >= 0 && v < n1;
      bool u2 = u >= n1 && u < n1 + n2, v2 = v >= n1 && v < n1 + n2;
      if (u1 && v2) {
        std::size_t i = static_cast<std::size_t>(u) * n2 + (v - n1);
        if (seen[i]) fail("duplicate edge at line " + std::to_string(lineno));
        seen[i] = true;
        g.set_weight1(u, v - n1, Weight(w));
      } else if (u2 && v1) {
        std::size_t i = static_cast<std::size_t>(n1) * n2 +
                        static_cast<std::size_t>(u - n1) * n1 + v;
        if (seen[i]) fail("duplicate edge at line " + std::to_string(lineno));
        seen[i] = true;
        g.set_weight2(u - n1, v, Weight(w));
      } else {
        fail("edge does not cross parts at line " + std::to_string(lineno));
      }
    });
    return g;
  }
  fail("unknown graph kind: " + kind);
}

AnyGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  return load_graph(in);
}

void save_graph(const AnyGraph& g, std::ostream& out) {
  if (const auto* cg = std::get_if<CompleteGraph>(&g)) {
    int n = cg->size();
    out << "complete " << n << "\n";
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v) {
          out << u << " " << v << " " << format_weight(cg->weight_value(u, v)) << "\n";
        }
      }
    }
    return;
  }
  const auto& bg = std::get<BipartiteGraph>(g);
  int n1 = bg.size1(), n2 = bg.size2();
  out << "bipartite " << n1 << " " << n2 << "\n";
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < n2; ++v) {
      out << u << " " << (n1 + v) << " " << format_weight(bg.weight1_value(u, v)) << "\n";
    }
  }
  for (int u = 0; u < n2; ++u) {
    for (int v = 0; v < n1; ++v) {
      out << (n1 + u) << " " << v << " " << format_weight(bg.weight2_value(u, v)) << "\n";
    }
  }
}

void save_graph_file(const AnyGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot open " + path);
  save_graph(g, out);
}

}  // namespace qgraph
