// Command-line harness: generate graphs, run instrumented algorithms,
// verify against oracles, sweep sizes for exponent fits, and sweep k.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgraph/experiments.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/oracles.hpp"

namespace {

using namespace qgraph;

struct CommonOpts {
  std::string algorithm = "dijkstra-classic";
  std::string mode = "classical";
  int n = 0;
  int n1 = 0, n2 = 0;
  int v0 = 0;
  std::string k = "";
  std::uint64_t seed = 1;
  int trials = 1;
  std::string graph_file;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_algorithm = true) {
  if (with_algorithm) {
    cmd->add_option("--algorithm", o.algorithm,
                    "dijkstra-classic|dijkstra-no-update|dijkstra-periodic|"
                    "prim-classic|prim-no-update|prim-periodic|bipartite|diameter");
    cmd->add_option("--mode", o.mode, "classical|ideal-quantum|dh-sim");
  }
  cmd->add_option("--n", o.n, "complete graph size");
  cmd->add_option("--n1", o.n1, "bipartite part 1 size");
  cmd->add_option("--n2", o.n2, "bipartite part 2 size");
  cmd->add_option("--v0", o.v0, "start vertex (default 0)");
  cmd->add_option("--k", o.k, "flush period: integer or 'auto' (= ceil(sqrt(n)))");
  cmd->add_option("--seed", o.seed, "base seed");
  cmd->add_option("--trials", o.trials, "trial count (dh-sim derives one sub-seed per trial)");
  cmd->add_option("--graph-file", o.graph_file, "run on a stored graph instead of generating");
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--format", o.format, "csv|json");
}

std::optional<int> parse_k(const std::string& k) {
  if (k.empty()) return std::nullopt;
  if (k == "auto") return 0;
  return std::stoi(k);
}

RunConfig to_config(const CommonOpts& o) {
  RunConfig c;
  c.algorithm = parse_algorithm(o.algorithm);
  c.mode = parse_mode(o.mode);
  c.n = o.n;
  c.n1 = o.n1;
  c.n2 = o.n2;
  c.v0 = o.v0;
  c.k = parse_k(o.k);
  c.seed = o.seed;
  c.trials = o.trials;
  if (!o.graph_file.empty()) c.graph_file = o.graph_file;
  return c;
}

void emit(const std::vector<CostRow>& rows, const CommonOpts& o) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw std::runtime_error("cannot open " + o.out);
    out = &file;
  }
  if (o.format == "json") {
    write_json(rows, *out);
  } else if (o.format == "csv") {
    write_csv(rows, *out);
  } else {
    throw std::invalid_argument("unknown format: " + o.format);
  }
}

std::vector<int> parse_sizes(const std::string& sizes) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < sizes.size()) {
    std::size_t comma = sizes.find(',', pos);
    if (comma == std::string::npos) comma = sizes.size();
    out.push_back(std::stoi(sizes.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty size list");
  return out;
}

int cmd_run(const CommonOpts& o) {
  emit(run_trials(to_config(o)), o);
  return 0;
}

int cmd_gen(const CommonOpts& o) {
  GraphGenSpec spec;
  spec.seed = o.seed;
  if (o.n1 > 0 || o.n2 > 0) {
    spec.shape = GraphShape::Bipartite;
    spec.n1 = o.n1;
    spec.n2 = o.n2;
  } else {
    spec.n = o.n;
  }
  AnyGraph g = generate(spec);
  if (o.out.empty()) {
    save_graph(g, std::cout);
  } else {
    save_graph_file(g, o.out);
  }
  return 0;
}

int cmd_verify(const CommonOpts& o, int graphs, int bipartite_graphs, int max_n,
               bool inject_fault) {
  VerifyReport complete =
      verify_random_graphs(graphs, max_n, o.seed, inject_fault);
  VerifyReport bip = verify_random_bipartite(bipartite_graphs, std::min(max_n, 16), o.seed);

  int checked = complete.runs_checked + bip.runs_checked;
  std::size_t bad = complete.mismatches.size() + bip.mismatches.size();
  for (const std::string& m : complete.mismatches) std::cout << "MISMATCH " << m << "\n";
  for (const std::string& m : bip.mismatches) std::cout << "MISMATCH " << m << "\n";
  std::cout << (bad == 0 ? "PASS" : "FAIL") << ": "
            << complete.graphs_checked + bip.graphs_checked << " graphs, " << checked
            << " runs, " << bad << " mismatches\n";
  return bad == 0 ? 0 : 1;
}

int cmd_scaling(const CommonOpts& o, const std::string& sizes) {
  std::vector<CostRow> rows;
  for (int size : parse_sizes(sizes)) {
    CommonOpts cell = o;
    if (parse_algorithm(o.algorithm) == AlgorithmId::Bipartite) {
      cell.n2 = size;
    } else {
      cell.n = size;
    }
    RunConfig config = to_config(cell);
    for (const CostRow& row : run_trials(config)) rows.push_back(row);
  }
  ExponentFit fit = fit_exponent(rows);
  emit(rows, o);
  std::cerr << "fit: slope=" << fit.slope << " intercept=" << fit.intercept
            << " residual=" << fit.residual << "\n";
  return 0;
}

int cmd_ksweep(const CommonOpts& o) {
  if (o.n < 2) throw std::invalid_argument("ksweep needs --n >= 2");
  std::vector<CostRow> rows;
  std::uint64_t best_total = ~0ULL;
  int best_k = 1;
  for (int k = 1; k <= o.n; k *= 2) {
    CommonOpts cell = o;
    cell.k = std::to_string(k);
    for (const CostRow& row : run_trials(to_config(cell))) {
      if (row.total < best_total) {
        best_total = row.total;
        best_k = k;
      }
      rows.push_back(row);
    }
  }
  emit(rows, o);
  std::cerr << "minimum total " << best_total << " at k=" << best_k
            << " (auto k would be " << resolve_auto_k(o.n) << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid classical/quantum graph algorithm experiments"};
  app.require_subcommand(1);

  CommonOpts run_opts, gen_opts, verify_opts, scaling_opts, ksweep_opts;
  std::string sizes;
  int verify_graphs = 200, verify_bipartite = 100, verify_max_n = 32;
  bool inject_fault = false;

  auto* run = app.add_subcommand("run", "run one algorithm and emit cost rows");
  add_common(run, run_opts);

  auto* verify = app.add_subcommand("verify", "cross-check algorithms against oracles");
  add_common(verify, verify_opts, false);
  verify->add_option("--graphs", verify_graphs, "number of complete graphs");
  verify->add_option("--bipartite-graphs", verify_bipartite, "number of bipartite graphs");
  verify->add_option("--max-n", verify_max_n, "maximum graph size");
  verify->add_flag("--inject-fault", inject_fault,
                   "corrupt one computed distance per graph (negative control)");

  auto* scaling = app.add_subcommand("scaling", "sweep sizes and fit the cost exponent");
  add_common(scaling, scaling_opts);
  scaling->add_option("--sizes", sizes, "comma-separated size grid")->required();

  auto* ksweep = app.add_subcommand("ksweep", "sweep k in powers of two for fixed n");
  add_common(ksweep, ksweep_opts);

  auto* gen = app.add_subcommand("gen", "generate a graph file");
  add_common(gen, gen_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opts);
    if (verify->parsed()) {
      return cmd_verify(verify_opts, verify_graphs, verify_bipartite, verify_max_n,
                        inject_fault);
    }
    if (scaling->parsed()) return cmd_scaling(scaling_opts, sizes);
    if (ksweep->parsed()) return cmd_ksweep(ksweep_opts);
    if (gen->parsed()) return cmd_gen(gen_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
