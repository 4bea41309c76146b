#pragma once

#include <string>
#include <vector>

#include "pmsched/lns.hpp"
#include "pmsched/search.hpp"

namespace pmsched {

// Comparison harness: runs a set of named methods over a set of instances
// and aggregates the usual table (how often each method matched the best
// value any method found, average deviation from it, nodes, time to best).

extern const std::vector<std::string> kBenchMethods;
bool bench_method_known(const std::string& name);

struct BenchOptions {
  SearchConfig search;           // criterion and pruning toggles shared by every method
  long long maxDiscrepancies = 3;  // budget for the one-shot budgeted methods
  double timeLimitSeconds = 0;     // per run; <= 0: none
  int jobs = 1;                    // worker threads over (instance, method) cells
};

struct BenchCell {
  bool feasible = false;
  Time value = kTimeInfinity;
  SearchStats stats;
};

struct BenchReport {
  std::vector<std::string> methods;
  std::vector<std::string> instances;
  std::vector<std::vector<BenchCell>> cells;  // cells[instance][method]
  std::vector<Time> bestKnown;                // per instance, best over the methods run
};

BenchReport run_bench(const std::vector<Instance>& instances,
                      const std::vector<std::string>& names,
                      const std::vector<std::string>& methods, const BenchOptions& options);

// One row per (instance, method) with values and pruning counters.
std::string bench_csv(const BenchReport& report);

// Aligned per-method summary: NbBest, %Best, AvgDev%, AvgNodes, AvgTBest and
// averaged pruning counters.
std::string bench_table(const BenchReport& report);

}  // namespace pmsched
