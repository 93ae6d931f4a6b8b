#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qgraph/ledger.hpp"
#include "qgraph/rng.hpp"

namespace qgraph {

enum class FinderKind { Classical, IdealQuantum, DHSim };

struct FinderMode {
  FinderKind kind = FinderKind::Classical;
  std::uint64_t seed = 0;  // DHSim only

  static FinderMode classical() { return {FinderKind::Classical, 0}; }
  static FinderMode ideal_quantum() { return {FinderKind::IdealQuantum, 0}; }
  static FinderMode dh_sim(std::uint64_t seed) { return {FinderKind::DHSim, seed}; }
};

struct MinResult {
  std::size_t index;
  double key;
};

inline std::uint64_t ceil_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  while (r * r < n) ++r;
  return r;
}

// Minimum/maximum finder over lazily keyed candidates with per-mode query
// accounting. Always returns a true minimum; the mode only changes what is
// charged to the ledger. Classical charges N, IdealQuantum charges ceil(sqrt(N)),
// DHSim charges the random cost of a threshold search (see find_min).
class Finder {
 public:
  explicit Finder(FinderMode mode) : mode_(mode), rng_(mode.seed) {}

  FinderKind kind() const { return mode_.kind; }

  // key(i) is evaluated as needed; each candidate counts as one query in
  // the cost model no matter how many table reads the key combines.
  template <class KeyFn>
  MinResult find_min(std::size_t n, KeyFn&& key, QueryLedger& ledger,
                     Phase phase, std::string_view label) {
    if (n == 0) throw std::invalid_argument("find_min over empty candidate set");
    switch (mode_.kind) {
      case FinderKind::Classical:
        ledger.charge(phase, label, n);
        return scan_min(n, key);
      case FinderKind::IdealQuantum:
        ledger.charge(phase, label, ceil_sqrt(n));
        return scan_min(n, key);
      case FinderKind::DHSim:
        return dh_sim_min(n, key, ledger, phase, label);
    }
    throw std::logic_error("unreachable");
  }

  template <class KeyFn>
  MinResult find_max(std::size_t n, KeyFn&& key, QueryLedger& ledger,
                     Phase phase, std::string_view label) {
    MinResult r = find_min(
        n, [&](std::size_t i) { return -key(i); }, ledger, phase, label);
    return {r.index, -r.key};
  }

 private:
  template <class KeyFn>
  static MinResult scan_min(std::size_t n, KeyFn&& key) {
    std::size_t best = 0;
    double best_key = key(std::size_t{0});
    for (std::size_t i = 1; i < n; ++i) {
      double k = key(i);
      if (k < best_key) {
        best = i;
        best_key = k;
      }
    }
    return {best, best_key};
  }

  // Threshold procedure modeled on Durr-Hoyer: start from a random
  // threshold, repeatedly Grover-search the strictly-better set B at a
  // charge of ceil((pi/4) sqrt(N/|B|)), and finish with one unsuccessful
  // search at ceil((pi/4) sqrt(N)). Cost is stochastic; the returned
  // element is always a true minimum (failure is not modeled).
  template <class KeyFn>
  MinResult dh_sim_min(std::size_t n, KeyFn&& key, QueryLedger& ledger,
                       Phase phase, std::string_view label) {
    constexpr double kGroverFactor = 0.78539816339744830962;  // pi/4
    std::vector<double> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = key(i);

    std::size_t y = rng_.next_below(n);
    std::vector<std::size_t> better;
    for (;;) {
      better.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (keys[i] < keys[y]) better.push_back(i);
      }
      if (better.empty()) break;
      double ratio = static_cast<double>(n) / static_cast<double>(better.size());
      ledger.charge(phase, label,
                    static_cast<std::uint64_t>(std::ceil(kGroverFactor * std::sqrt(ratio))));
      y = better[rng_.next_below(better.size())];
    }
    ledger.charge(phase, label,
                  static_cast<std::uint64_t>(
                      std::ceil(kGroverFactor * std::sqrt(static_cast<double>(n)))));
    return {y, keys[y]};
  }

  FinderMode mode_;
  SplitMix64 rng_;
};

}  // namespace qgraph
