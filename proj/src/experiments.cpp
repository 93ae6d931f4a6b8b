#include "qgraph/experiments.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qgraph/oracles.hpp"
#include "qgraph/rng.hpp"
#include "qgraph/shortest_paths.hpp"
#include "qgraph/spanning_tree.hpp"

namespace qgraph {

namespace {

// FNV-1a over 64-bit words; enough for a result digest.
class Digest {
 public:
  void add_u64(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (x >> (8 * i)) & 0xff;
      hash_ *= 0x100000001b3ULL;
    }
  }
  void add_double(double d) { add_u64(std::bit_cast<std::uint64_t>(d)); }
  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 0; i < 16; ++i) s[15 - i] = digits[(hash_ >> (4 * i)) & 0xf];
    return s;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t i) {
  return SplitMix64(base ^ (i + 1) * 0x9e3779b97f4a7c15ULL).next_u64();
}

FinderMode make_mode(FinderKind kind, std::uint64_t seed, int trial) {
  if (kind == FinderKind::DHSim) {
    return FinderMode::dh_sim(derive_seed(seed, 0xd5000000ULL + trial));
  }
  return {kind, 0};
}

std::string path_checksum(const PathTable& t) {
  Digest d;
  for (const Weight& w : t.lambda) d.add_double(w.value());
  return d.hex();
}

std::string bipartite_checksum(const BipartitePathTable& t) {
  Digest d;
  for (const Weight& w : t.lambda1) d.add_double(w.value());
  for (const Weight& w : t.lambda2) d.add_double(w.value());
  return d.hex();
}

// DHSim may pick a different tree among ties, so its digest covers the
// weight only; the deterministic modes also cover the edge set.
std::string tree_checksum(const TreeResult& t, FinderKind kind) {
  Digest d;
  if (kind != FinderKind::DHSim) {
    for (auto [u, v] : t.edges) {
      d.add_u64(static_cast<std::uint64_t>(u));
      d.add_u64(static_cast<std::uint64_t>(v));
    }
  }
  d.add_double(t.total_weight.value());
  return d.hex();
}

std::string value_checksum(double x) {
  Digest d;
  d.add_double(x);
  return d.hex();
}

}  // namespace

AlgorithmId parse_algorithm(const std::string& name) {
  if (name == "dijkstra-classic") return AlgorithmId::DijkstraClassic;
  if (name == "dijkstra-no-update") return AlgorithmId::DijkstraNoUpdate;
  if (name == "dijkstra-periodic") return AlgorithmId::DijkstraPeriodic;
  if (name == "prim-classic") return AlgorithmId::PrimClassic;
  if (name == "prim-no-update") return AlgorithmId::PrimNoUpdate;
  if (name == "prim-periodic") return AlgorithmId::PrimPeriodic;
  if (name == "bipartite") return AlgorithmId::Bipartite;
  if (name == "diameter") return AlgorithmId::Diameter;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string algorithm_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::DijkstraClassic: return "dijkstra-classic";
    case AlgorithmId::DijkstraNoUpdate: return "dijkstra-no-update";
    case AlgorithmId::DijkstraPeriodic: return "dijkstra-periodic";
    case AlgorithmId::PrimClassic: return "prim-classic";
    case AlgorithmId::PrimNoUpdate: return "prim-no-update";
    case AlgorithmId::PrimPeriodic: return "prim-periodic";
    case AlgorithmId::Bipartite: return "bipartite";
    case AlgorithmId::Diameter: return "diameter";
  }
  throw std::logic_error("unreachable");
}

FinderKind parse_mode(const std::string& name) {
  if (name == "classical") return FinderKind::Classical;
  if (name == "ideal-quantum") return FinderKind::IdealQuantum;
  if (name == "dh-sim") return FinderKind::DHSim;
  throw std::invalid_argument("unknown mode: " + name);
}

std::string mode_name(FinderKind kind) {
  switch (kind) {
    case FinderKind::Classical: return "classical";
    case FinderKind::IdealQuantum: return "ideal-quantum";
    case FinderKind::DHSim: return "dh-sim";
  }
  throw std::logic_error("unreachable");
}

bool algorithm_is_periodic(AlgorithmId id) {
  return id == AlgorithmId::DijkstraPeriodic || id == AlgorithmId::PrimPeriodic ||
         id == AlgorithmId::Diameter;
}

bool algorithm_is_bipartite(AlgorithmId id) { return id == AlgorithmId::Bipartite; }

int resolve_auto_k(int n) { return static_cast<int>(ceil_sqrt(static_cast<std::uint64_t>(n))); }

const char* const kCsvHeader =
    "algorithm,mode,n,n1,n2,k,seed,trial,search_queries,update_queries,total,checksum";

std::string csv_line(const CostRow& row) {
  std::ostringstream os;
  auto dim = [&](int x) {
    if (x >= 0) os << x;
    os << ",";
  };
  os << row.algorithm << "," << row.mode << ",";
  dim(row.n);
  dim(row.n1);
  dim(row.n2);
  dim(row.k);
  os << row.seed << "," << row.trial << "," << row.search_queries << ","
     << row.update_queries << "," << row.total << "," << row.checksum;
  return os.str();
}

void write_csv(const std::vector<CostRow>& rows, std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const CostRow& row : rows) out << csv_line(row) << "\n";
}

void write_json(const std::vector<CostRow>& rows, std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CostRow& r : rows) {
    nlohmann::json o;
    o["algorithm"] = r.algorithm;
    o["mode"] = r.mode;
    if (r.n >= 0) o["n"] = r.n;
    if (r.n1 >= 0) o["n1"] = r.n1;
    if (r.n2 >= 0) o["n2"] = r.n2;
    if (r.k >= 0) o["k"] = r.k;
    o["seed"] = r.seed;
    o["trial"] = r.trial;
    o["search_queries"] = r.search_queries;
    o["update_queries"] = r.update_queries;
    o["total"] = r.total;
    o["checksum"] = r.checksum;
    arr.push_back(std::move(o));
  }
  out << arr.dump(2) << "\n";
}

CostRow run_once(const RunConfig& config, int trial) {
  const bool bipartite = algorithm_is_bipartite(config.algorithm);
  if (config.k && !algorithm_is_periodic(config.algorithm)) {
    throw std::invalid_argument("k applies only to periodic algorithms");
  }

  CostRow row;
  row.algorithm = algorithm_name(config.algorithm);
  row.mode = mode_name(config.mode);
  row.seed = config.seed;
  row.trial = trial;

  FinderMode mode = make_mode(config.mode, config.seed, trial);
  QueryLedger ledger;

  if (bipartite) {
    BipartiteGraph g = [&] {
      if (config.graph_file) {
        AnyGraph any = load_graph_file(*config.graph_file);
        if (!std::holds_alternative<BipartiteGraph>(any)) {
          throw std::invalid_argument("algorithm needs a bipartite graph file");
        }
        return std::get<BipartiteGraph>(std::move(any));
      }
      GraphGenSpec spec;
      spec.shape = GraphShape::Bipartite;
      spec.n1 = config.n1;
      spec.n2 = config.n2;
      spec.seed = config.seed;
      return generate_bipartite(spec);
    }();
    row.n1 = g.size1();
    row.n2 = g.size2();
    BipartitePathTable t = bipartite_partial(g, config.v0, mode, ledger);
    row.checksum = bipartite_checksum(t);
  } else {
    const bool needs_symmetric = config.algorithm == AlgorithmId::PrimClassic ||
                                 config.algorithm == AlgorithmId::PrimNoUpdate ||
                                 config.algorithm == AlgorithmId::PrimPeriodic;
    CompleteGraph g = [&] {
      if (config.graph_file) {
        AnyGraph any = load_graph_file(*config.graph_file);
        if (!std::holds_alternative<CompleteGraph>(any)) {
          throw std::invalid_argument("algorithm needs a complete graph file");
        }
        return std::get<CompleteGraph>(std::move(any));
      }
      GraphGenSpec spec;
      spec.n = config.n;
      spec.seed = config.seed;
      spec.symmetric = needs_symmetric;
      return generate_complete(spec);
    }();
    row.n = g.size();
    int k = 0;
    if (algorithm_is_periodic(config.algorithm)) {
      k = config.k.value_or(0);
      if (k == 0) k = resolve_auto_k(g.size());
      row.k = k;
    }
    switch (config.algorithm) {
      case AlgorithmId::DijkstraClassic:
        row.checksum = path_checksum(dijkstra_classic(g, config.v0, mode, ledger));
        break;
      case AlgorithmId::DijkstraNoUpdate:
        row.checksum = path_checksum(dijkstra_no_update(g, config.v0, mode, ledger));
        break;
      case AlgorithmId::DijkstraPeriodic:
        row.checksum = path_checksum(dijkstra_periodic(g, config.v0, k, mode, ledger));
        break;
      case AlgorithmId::PrimClassic:
        row.checksum = tree_checksum(prim_classic(g, config.v0, mode, ledger), config.mode);
        break;
      case AlgorithmId::PrimNoUpdate:
        row.checksum = tree_checksum(prim_no_update(g, config.v0, mode, ledger), config.mode);
        break;
      case AlgorithmId::PrimPeriodic:
        row.checksum =
            tree_checksum(prim_periodic(g, config.v0, k, mode, ledger), config.mode);
        break;
      case AlgorithmId::Diameter: {
        DiameterResult r = diameter(g, InnerAlgorithm::Periodic, k, mode, ledger);
        row.checksum = value_checksum(r.diameter.value());
        break;
      }
      default:
        throw std::logic_error("unreachable");
    }
  }

  row.search_queries = ledger.search_queries;
  row.update_queries = ledger.update_queries;
  row.total = ledger.total();
  return row;
}

std::vector<CostRow> run_trials(const RunConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<CostRow> rows;
  rows.reserve(config.trials);
  for (int trial = 0; trial < config.trials; ++trial) {
    rows.push_back(run_once(config, trial));
  }
  return rows;
}

ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& size_total) {
  std::map<double, std::pair<double, int>> by_size;
  for (auto [size, total] : size_total) {
    auto& [sum, count] = by_size[size];
    sum += total;
    ++count;
  }
  if (by_size.size() < 3) {
    throw std::invalid_argument("exponent fit needs at least 3 distinct sizes");
  }

  std::vector<double> xs, ys;
  for (auto& [size, acc] : by_size) {
    xs.push_back(std::log(size));
    ys.push_back(std::log(acc.first / acc.second));
  }
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  ExponentFit fit;
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / m;
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / m);
  return fit;
}

ExponentFit fit_exponent(const std::vector<CostRow>& rows) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(rows.size());
  for (const CostRow& r : rows) {
    double size = r.n >= 0 ? r.n : r.n2;
    pts.emplace_back(size, static_cast<double>(r.total));
  }
  return fit_exponent(pts);
}

namespace {

struct Cross {
  VerifyReport* report;
  std::string context;

  void check(bool ok, const std::string& what) {
    ++report->runs_checked;
    if (!ok) report->mismatches.push_back(context + ": " + what);
  }
};

const FinderKind kAllKinds[] = {FinderKind::Classical, FinderKind::IdealQuantum,
                                FinderKind::DHSim};

std::string mismatch_lambda(const std::vector<Weight>& got,
                            const oracles::DistanceMatrix& want, int v0, int offset) {
  for (std::size_t v = 0; v < got.size(); ++v) {
    double w = want.at(v0, static_cast<int>(v) + offset);
    if (got[v].value() != w) {
      std::ostringstream os;
      os << "lambda[" << v << "] = " << got[v].value() << ", oracle " << w;
      return os.str();
    }
  }
  return {};
}

}  // namespace

VerifyReport verify_random_graphs(int graph_count, int max_n, std::uint64_t base_seed,
                                  bool fault_injection) {
  VerifyReport report;
  for (int i = 0; i < graph_count; ++i) {
    std::uint64_t seed = derive_seed(base_seed, static_cast<std::uint64_t>(i));
    SplitMix64 pick(seed);
    int n = 1 + static_cast<int>(pick.next_below(static_cast<std::uint64_t>(max_n)));
    int v0 = static_cast<int>(pick.next_below(static_cast<std::uint64_t>(n)));

    GraphGenSpec spec;
    spec.n = n;
    spec.seed = seed;
    CompleteGraph g = generate_complete(spec);
    spec.symmetric = true;
    CompleteGraph gs = generate_complete(spec);

    oracles::DistanceMatrix fw = oracles::floyd_warshall(g);
    TreeResult mst = oracles::kruskal_mst(gs);
    double fw_diameter = oracles::diameter_of(fw);

    std::ostringstream ctx;
    ctx << "graph " << i << " (n=" << n << " v0=" << v0 << " seed=" << seed << ")";
    ++report.graphs_checked;

    for (FinderKind kind : kAllKinds) {
      FinderMode mode = make_mode(kind, seed, 0);
      std::string tag = "[" + mode_name(kind) + "]";
      QueryLedger ledger;

      {
        Cross c{&report, ctx.str() + " dijkstra-classic" + tag};
        PathTable t = dijkstra_classic(g, v0, mode, ledger);
        if (fault_injection && kind == FinderKind::Classical) {
          t.lambda[t.settle_order.back()] =
              t.lambda[t.settle_order.back()] + Weight(1.0);
        }
        std::string bad = mismatch_lambda(t.lambda, fw, v0, 0);
        c.check(bad.empty(), bad);
      }
      {
        Cross c{&report, ctx.str() + " dijkstra-no-update" + tag};
        PathTable t = dijkstra_no_update(g, v0, mode, ledger);
        std::string bad = mismatch_lambda(t.lambda, fw, v0, 0);
        c.check(bad.empty(), bad);
      }
      {
        Cross c{&report, ctx.str() + " dijkstra-periodic" + tag};
        PathTable t = dijkstra_periodic(g, v0, resolve_auto_k(n), mode, ledger);
        std::string bad = mismatch_lambda(t.lambda, fw, v0, 0);
        c.check(bad.empty(), bad);
      }
      {
        Cross c{&report, ctx.str() + " prim-classic" + tag};
        TreeResult t = prim_classic(gs, v0, mode, ledger);
        c.check(t.total_weight == mst.total_weight, "tree weight mismatch");
      }
      {
        Cross c{&report, ctx.str() + " prim-no-update" + tag};
        TreeResult t = prim_no_update(gs, v0, mode, ledger);
        c.check(t.total_weight == mst.total_weight, "tree weight mismatch");
      }
      {
        Cross c{&report, ctx.str() + " prim-periodic" + tag};
        TreeResult t = prim_periodic(gs, v0, resolve_auto_k(n), mode, ledger);
        c.check(t.total_weight == mst.total_weight, "tree weight mismatch");
      }
      {
        Cross c{&report, ctx.str() + " diameter" + tag};
        DiameterResult r = diameter(g, InnerAlgorithm::Periodic, 0, mode, ledger);
        c.check(r.diameter.value() == fw_diameter, "diameter mismatch");
      }
    }
  }
  return report;
}

VerifyReport verify_random_bipartite(int graph_count, int max_part,
                                     std::uint64_t base_seed) {
  VerifyReport report;
  for (int i = 0; i < graph_count; ++i) {
    std::uint64_t seed = derive_seed(base_seed ^ 0xb1ULL, static_cast<std::uint64_t>(i));
    SplitMix64 pick(seed);
    int n1 = 1 + static_cast<int>(pick.next_below(static_cast<std::uint64_t>(max_part)));
    int n2 = 1 + static_cast<int>(pick.next_below(static_cast<std::uint64_t>(max_part)));
    int v0 = static_cast<int>(pick.next_below(static_cast<std::uint64_t>(n1)));

    GraphGenSpec spec;
    spec.shape = GraphShape::Bipartite;
    spec.n1 = n1;
    spec.n2 = n2;
    spec.seed = seed;
    BipartiteGraph g = generate_bipartite(spec);
    oracles::DistanceMatrix fw = oracles::floyd_warshall(g);

    std::ostringstream ctx;
    ctx << "bipartite " << i << " (n1=" << n1 << " n2=" << n2 << " v0=" << v0
        << " seed=" << seed << ")";
    ++report.graphs_checked;

    for (FinderKind kind : kAllKinds) {
      QueryLedger ledger;
      Cross c{&report, ctx.str() + " bipartite[" + mode_name(kind) + "]"};
      BipartitePathTable t = bipartite_partial(g, v0, make_mode(kind, seed, 0), ledger);
      std::string bad = mismatch_lambda(t.lambda1, fw, v0, 0);
      if (bad.empty()) bad = mismatch_lambda(t.lambda2, fw, v0, n1);
      c.check(bad.empty(), bad);
    }
  }
  return report;
}

}  // namespace qgraph
