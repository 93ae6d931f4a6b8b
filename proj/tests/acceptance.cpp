// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Everything runs in-process on seeded generators; no files or
// network. Tolerances are pinned in the checks below.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "qgraph/diameter.hpp"
#include "qgraph/experiments.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/min_search.hpp"
#include "qgraph/oracles.hpp"
#include "qgraph/shortest_paths.hpp"
#include "qgraph/spanning_tree.hpp"

using namespace qgraph;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Determinism fingerprint for criterion 8: criteria 1-3 and 7 append every
// numeric outcome here, and the whole batch is replayed and compared.
using Fingerprint = std::vector<std::uint64_t>;

void note(Fingerprint& fp, std::uint64_t v) { fp.push_back(v); }
void note(Fingerprint& fp, double v) { fp.push_back(std::bit_cast<std::uint64_t>(v)); }

std::uint64_t sum_classic(int n) {
  std::uint64_t total = 0;
  for (int i = 1; i <= n - 1; ++i) total += 2 * (n - i) - 1;
  return total;
}

std::uint64_t sum_pairs(int n) {
  std::uint64_t total = 0;
  for (int i = 1; i <= n - 1; ++i) total += static_cast<std::uint64_t>(i) * (n - i);
  return total;
}

// Criterion 1: every algorithm in every finder mode matches the oracles
// exactly on 200 complete graphs (n <= 32) and 100 bipartite graphs
// (parts <= 16), in under a minute.
bool criterion1(Fingerprint& fp, std::string& detail) {
  auto start = Clock::now();
  VerifyReport complete = verify_random_graphs(200, 32, 424242);
  VerifyReport bipartite = verify_random_bipartite(100, 16, 515151);
  double elapsed = seconds_since(start);
  note(fp, static_cast<std::uint64_t>(complete.runs_checked));
  note(fp, static_cast<std::uint64_t>(bipartite.runs_checked));
  note(fp, static_cast<std::uint64_t>(complete.mismatches.size()));
  note(fp, static_cast<std::uint64_t>(bipartite.mismatches.size()));
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%d+%d runs exact vs oracles in %.1fs",
                complete.runs_checked, bipartite.runs_checked, elapsed);
  detail = buf;
  if (!complete.ok()) {
    detail += "; first mismatch: " + complete.mismatches.front();
    return false;
  }
  if (!bipartite.ok()) {
    detail += "; first mismatch: " + bipartite.mismatches.front();
    return false;
  }
  return elapsed < 60.0;
}

// Criterion 2: k=1 periodic degenerates to the classic algorithm, identically
// (distances, predecessors, tree edges), over 50 seeds with n up to 64.
bool criterion2(Fingerprint& fp, std::string& detail) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    int n = 2 + static_cast<int>((seed * 9) % 63);  // 2..64
    GraphGenSpec spec;
    spec.n = n;
    spec.seed = 60000 + seed;

    CompleteGraph g = generate_complete(spec);
    QueryLedger la, lb;
    PathTable classic = dijkstra_classic(g, 0, FinderMode::classical(), la);
    PathTable periodic = dijkstra_periodic(g, 0, 1, FinderMode::classical(), lb);
    if (classic.lambda != periodic.lambda || classic.pred != periodic.pred) {
      detail = "dijkstra k=1 mismatch at seed " + std::to_string(spec.seed);
      return false;
    }
    note(fp, classic.lambda.back().value());

    spec.symmetric = true;
    CompleteGraph sg = generate_complete(spec);
    QueryLedger lc, ld;
    TreeResult pc = prim_classic(sg, 0, FinderMode::classical(), lc);
    TreeResult pp = prim_periodic(sg, 0, 1, FinderMode::classical(), ld);
    if (pc.edges != pp.edges || pc.total_weight != pp.total_weight) {
      detail = "prim k=1 mismatch at seed " + std::to_string(spec.seed);
      return false;
    }
    note(fp, pc.total_weight.value());
    ++checked;
  }
  detail = std::to_string(checked) + " seeds, n up to 64, identical output";
  return true;
}

// Criterion 3: classical ledgers reproduce the closed-form query counts with
// zero tolerance.
bool criterion3(Fingerprint& fp, std::string& detail) {
  for (int n : {4, 16, 64}) {
    GraphGenSpec spec;
    spec.n = n;
    spec.seed = 70000 + n;
    CompleteGraph g = generate_complete(spec);
    spec.symmetric = true;
    CompleteGraph sg = generate_complete(spec);

    QueryLedger l1, l2, l3, l4;
    dijkstra_classic(g, 0, FinderMode::classical(), l1);
    dijkstra_no_update(g, 0, FinderMode::classical(), l2);
    prim_classic(sg, 0, FinderMode::classical(), l3);
    prim_no_update(sg, 0, FinderMode::classical(), l4);
    for (const QueryLedger* l : {&l1, &l2, &l3, &l4}) note(fp, l->total());

    if (l1.total() != sum_classic(n) || l3.total() != sum_classic(n)) {
      detail = "classic ledger off closed form at n=" + std::to_string(n);
      return false;
    }
    if (l2.total() != sum_pairs(n) || l4.total() != sum_pairs(n)) {
      detail = "no-update ledger off closed form at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "ledgers equal sum(2(n-i)-1) and sum(i(n-i)) for n in {4,16,64}";
  return true;
}

double slope_for(AlgorithmId algorithm, FinderKind mode, const std::vector<int>& sizes,
                 bool auto_k) {
  std::vector<std::pair<double, double>> points;
  for (int n : sizes) {
    RunConfig config;
    config.algorithm = algorithm;
    config.mode = mode;
    config.n = n;
    config.seed = 90000 + static_cast<std::uint64_t>(n);
    if (auto_k) config.k = 0;
    CostRow row = run_once(config, 0);
    points.emplace_back(static_cast<double>(n), static_cast<double>(row.total));
  }
  return fit_exponent(points).slope;
}

// Criterion 4: log-log cost exponents land in the pinned windows.
bool criterion4(std::string& detail) {
  auto start = Clock::now();
  const std::vector<int> grid{64, 128, 256, 512, 1024};
  const std::vector<int> small_grid{64, 128, 256, 512};
  struct Check {
    const char* name;
    double slope, lo, hi;
  };
  std::vector<Check> checks{
      {"dijkstra-classic/classical",
       slope_for(AlgorithmId::DijkstraClassic, FinderKind::Classical, grid, false), 1.9,
       2.1},
      {"dijkstra-no-update/classical",
       slope_for(AlgorithmId::DijkstraNoUpdate, FinderKind::Classical, grid, false),
       2.85, 3.1},
      {"dijkstra-no-update/ideal-quantum",
       slope_for(AlgorithmId::DijkstraNoUpdate, FinderKind::IdealQuantum, grid, false),
       1.85, 2.1},
      {"dijkstra-periodic/ideal-quantum",
       slope_for(AlgorithmId::DijkstraPeriodic, FinderKind::IdealQuantum, grid, true),
       1.6, 1.9},
      {"prim-periodic/ideal-quantum",
       slope_for(AlgorithmId::PrimPeriodic, FinderKind::IdealQuantum, grid, true), 1.6,
       1.9},
      {"diameter/ideal-quantum",
       slope_for(AlgorithmId::Diameter, FinderKind::IdealQuantum, small_grid, true),
       2.05, 2.45},
  };
  double elapsed = seconds_since(start);
  detail.clear();
  bool ok = elapsed < 600.0;
  for (const Check& c : checks) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s%s=%.3f", detail.empty() ? "" : ", ", c.name,
                  c.slope);
    detail += buf;
    if (!(c.slope >= c.lo && c.slope <= c.hi)) ok = false;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), " (%.1fs)", elapsed);
  detail += buf;
  return ok;
}

// Criterion 5: at n=1024 the ideal-quantum periodic cost over the doubling
// k-grid bottoms out within a factor of two of k=32.
bool criterion5(std::string& detail) {
  int best_k = 0;
  std::uint64_t best_total = 0;
  for (int k = 1; k <= 1024; k *= 2) {
    RunConfig config;
    config.algorithm = AlgorithmId::DijkstraPeriodic;
    config.mode = FinderKind::IdealQuantum;
    config.n = 1024;
    config.k = k;
    config.seed = 123456;
    CostRow row = run_once(config, 0);
    if (best_k == 0 || row.total < best_total) {
      best_k = k;
      best_total = row.total;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "argmin k=%d (total=%llu), window [16,64]", best_k,
                static_cast<unsigned long long>(best_total));
  detail = buf;
  return best_k >= 16 && best_k <= 64;
}

// Criterion 6: bipartite partial update beats classical at n1=8 for every n2,
// with a monotonically improving ratio.
bool criterion6(std::string& detail) {
  double prev_ratio = 2.0;
  detail.clear();
  for (int n2 : {64, 256, 1024, 4096}) {
    RunConfig config;
    config.algorithm = AlgorithmId::Bipartite;
    config.n1 = 8;
    config.n2 = n2;
    config.seed = 777000 + static_cast<std::uint64_t>(n2);
    config.mode = FinderKind::Classical;
    CostRow classical = run_once(config, 0);
    config.mode = FinderKind::IdealQuantum;
    CostRow quantum = run_once(config, 0);
    double ratio = static_cast<double>(quantum.total) / classical.total;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%sn2=%d ratio=%.4f", detail.empty() ? "" : ", ",
                  n2, ratio);
    detail += buf;
    if (quantum.total >= classical.total || ratio >= prev_ratio) return false;
    prev_ratio = ratio;
  }
  return true;
}

// Criterion 7: the simulated Durr-Hoyer finder is exact on every trial and
// stays within 4*sqrt(N) queries on average.
bool criterion7(Fingerprint& fp, std::string& detail) {
  detail.clear();
  for (std::size_t n : {std::size_t{100}, std::size_t{10000}}) {
    SplitMix64 key_rng(n);
    std::vector<double> keys(n);
    for (double& k : keys) k = key_rng.next_unit_open_low();
    const double true_min = *std::min_element(keys.begin(), keys.end());

    std::uint64_t total_charge = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      Finder finder(FinderMode::dh_sim(static_cast<std::uint64_t>(trial) * 2654435761u + n));
      QueryLedger ledger;
      MinResult r = finder.find_min(
          n, [&](std::size_t i) { return keys[i]; }, ledger, Phase::Search, "s");
      if (r.key != true_min) {
        detail = "dh-sim missed the minimum at N=" + std::to_string(n);
        return false;
      }
      total_charge += ledger.total();
    }
    note(fp, total_charge);
    double mean = static_cast<double>(total_charge) / 1000.0;
    double normalized = mean / std::sqrt(static_cast<double>(n));
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%sN=%zu mean/sqrt(N)=%.2f",
                  detail.empty() ? "" : ", ", n, normalized);
    detail += buf;
    if (normalized > 4.0) return false;
  }
  detail += "; 1000/1000 exact at each N";
  return true;
}

Fingerprint deterministic_batch() {
  Fingerprint fp;
  std::string scratch;
  criterion1(fp, scratch);
  criterion2(fp, scratch);
  criterion3(fp, scratch);
  criterion7(fp, scratch);
  return fp;
}

}  // namespace

int main() {
  bool all_ok = true;
  Fingerprint first_pass;
  auto report = [&](int id, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) all_ok = false;
  };

  std::string detail;
  report(1, criterion1(first_pass, detail), detail);
  report(2, criterion2(first_pass, detail), detail);
  report(3, criterion3(first_pass, detail), detail);
  report(4, criterion4(detail), detail);
  report(5, criterion5(detail), detail);
  report(6, criterion6(detail), detail);
  report(7, criterion7(first_pass, detail), detail);

  // Criterion 8: criteria 1-3 and 7 replayed end to end give bit-identical
  // results, with no files or network involved.
  Fingerprint replay = deterministic_batch();
  bool deterministic = replay == first_pass;
  report(8, deterministic,
         deterministic
             ? "criteria 1-3,7 replay bit-identical (" +
                   std::to_string(replay.size()) + " recorded values), fully in-process"
             : "replay of criteria 1-3,7 diverged");

  return all_ok ? 0 : 1;
}
