#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace qgraph {

// Which side of the paper's work split a query belongs to.
enum class Phase { Search, Update };

// Exact count of weight-oracle queries for one algorithm run.
// Every charge lands in exactly one of the two top-level counters and in
// one labeled breakdown bucket, so total() always equals the breakdown sum.
struct QueryLedger {
  std::uint64_t search_queries = 0;
  std::uint64_t update_queries = 0;
  std::map<std::string, std::uint64_t, std::less<>> phase_breakdown;

  void charge(Phase phase, std::string_view label, std::uint64_t count) {
    if (phase == Phase::Search) {
      search_queries += count;
    } else {
      update_queries += count;
    }
    auto it = phase_breakdown.find(label);
    if (it == phase_breakdown.end()) {
      phase_breakdown.emplace(std::string(label), count);
    } else {
      it->second += count;
    }
  }

  std::uint64_t total() const { return search_queries + update_queries; }

  std::uint64_t breakdown_total() const {
    std::uint64_t sum = 0;
    for (const auto& [label, count] : phase_breakdown) sum += count;
    return sum;
  }

  void merge(const QueryLedger& other) {
    search_queries += other.search_queries;
    update_queries += other.update_queries;
    for (const auto& [label, count] : other.phase_breakdown) {
      phase_breakdown[label] += count;
    }
  }
};

}  // namespace qgraph
