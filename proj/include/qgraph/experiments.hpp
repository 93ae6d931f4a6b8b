#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qgraph/diameter.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/min_search.hpp"

namespace qgraph {

enum class AlgorithmId {
  DijkstraClassic,
  DijkstraNoUpdate,
  DijkstraPeriodic,
  PrimClassic,
  PrimNoUpdate,
  PrimPeriodic,
  Bipartite,
  Diameter,
};

AlgorithmId parse_algorithm(const std::string& name);
std::string algorithm_name(AlgorithmId id);
FinderKind parse_mode(const std::string& name);
std::string mode_name(FinderKind kind);
bool algorithm_is_periodic(AlgorithmId id);
bool algorithm_is_bipartite(AlgorithmId id);

// k policy: absent = not applicable, 0 = auto (ceil(sqrt(n))), else fixed.
struct RunConfig {
  AlgorithmId algorithm = AlgorithmId::DijkstraClassic;
  FinderKind mode = FinderKind::Classical;
  int n = 0;
  int n1 = 0, n2 = 0;
  int v0 = 0;
  std::optional<int> k;
  std::uint64_t seed = 0;
  int trials = 1;
  std::optional<std::string> graph_file;
};

// One CSV row. Inapplicable dimensions stay negative and serialize empty.
struct CostRow {
  std::string algorithm;
  std::string mode;
  int n = -1, n1 = -1, n2 = -1, k = -1;
  std::uint64_t seed = 0;
  int trial = 0;
  std::uint64_t search_queries = 0;
  std::uint64_t update_queries = 0;
  std::uint64_t total = 0;
  std::string checksum;
};

extern const char* const kCsvHeader;

std::string csv_line(const CostRow& row);
void write_csv(const std::vector<CostRow>& rows, std::ostream& out);
void write_json(const std::vector<CostRow>& rows, std::ostream& out);

// Executes one trial. trial indexes DHSim seed derivation; Classical and
// IdealQuantum runs are trial-independent.
CostRow run_once(const RunConfig& config, int trial);
std::vector<CostRow> run_trials(const RunConfig& config);

int resolve_auto_k(int n);

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root mean squared residual in log space
};

// Ordinary least squares of log(total) against log(size). Needs at least
// three distinct sizes.
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& size_total);
ExponentFit fit_exponent(const std::vector<CostRow>& rows);

struct VerifyReport {
  int graphs_checked = 0;
  int runs_checked = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Cross-checks every algorithm in every finder mode against the oracles on
// seeded random graphs. fault_injection corrupts one computed distance per
// graph so the comparison machinery can be demonstrated to catch it.
VerifyReport verify_random_graphs(int graph_count, int max_n, std::uint64_t base_seed,
                                  bool fault_injection = false);
VerifyReport verify_random_bipartite(int graph_count, int max_part, std::uint64_t base_seed);

}  // namespace qgraph
