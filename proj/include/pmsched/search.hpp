#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "pmsched/branching.hpp"
#include "pmsched/model.hpp"

namespace pmsched {

enum class Strategy { DFS, DBDFS, LDStop, LDSlow };

inline constexpr long long kUnlimitedDiscrepancies = std::numeric_limits<long long>::max() / 2;

struct SearchConfig {
  Criterion criterion = Criterion::SumCompletion;
  Strategy strategy = Strategy::DFS;
  CountingPolicy counting;  // job deviations; machine deviations always count by rank
  long long maxDiscrepancies = kUnlimitedDiscrepancies;
  // Deviations are only allowed while discMinDepth <= depth < discMaxDepth;
  // outside that band only the first-ranked decision survives.
  int discMinDepth = 0;
  int discMaxDepth = std::numeric_limits<int>::max();

  bool useLbCp = true;
  bool useLbSrpt = true;
  bool useEnergetic = true;
  bool useFrontRule = false;
  bool useMaxflowRule = false;
  bool useAdaptedRules = false;

  double timeLimitSeconds = 0;  // <= 0: none
  std::uint64_t seed = 0;       // recorded with results; the search itself is deterministic

  // Floor for the MaxLateness deadline propagation, below the incumbent, so
  // window tightening can be stress-tested independently of the incumbent.
  std::optional<Time> energeticZBest;

  // Test instrumentation: called with the decision list of every complete
  // leaf the search visits.
  std::function<void(const std::vector<Decision>&)> onLeaf;
};

struct SearchStats {
  long long nodes = 0;   // children evaluated, root included
  long long leaves = 0;  // complete schedules visited
  long long prunedBound = 0;
  long long prunedEnergy = 0;
  long long prunedFront = 0;
  long long prunedFlow = 0;
  long long dominanceCancelled = 0;  // prunes dropped by the discrepancy budget
  double timeToBest = 0;
  double totalTime = 0;
  bool completed = true;  // false when the time limit cut the run short
  std::vector<std::pair<double, Time>> improvements;
};

struct Solution {
  bool feasible = false;
  Time value = kTimeInfinity;
  Schedule schedule;
  std::vector<Decision> decisions;  // order the leaf was built in
  SearchStats stats;
};

struct BranchChild {
  int job = -1, machine = -1;
  int jobRank = 0, machineRank = 0;
  long long deviationCost = 0;
  Time start = 0;
};

// Children of a node in exploration order: jobs ranked as in
// ranked_ready_jobs, machines per job as in ranked_machines. refNext, when
// given, is promoted to the first rank on both levels.
std::vector<BranchChild> branch(const PartialSchedule& ps, const SearchConfig& config,
                                const Decision* refNext);

// Shared wall-clock across nested searches, so a caller running repeated
// sweeps can keep one budget and one improvement timeline.
struct RunContext {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double deadlineSeconds = 0;  // <= 0: none
};

// Exhaustive depth-first branch and bound. The greedy completion of the root
// seeds the incumbent; a node is cut when its bound reaches the incumbent.
Solution solve_exact(const Instance& inst, const SearchConfig& config);

// Budgeted tree search: explores exactly the leaves whose accumulated
// deviation cost stays within config.maxDiscrepancies, honoring the
// strategy's visiting order. ref, when given, is replayed as the rank-0
// decision along its own path. warm, when given, seeds the incumbent and is
// returned unchanged if nothing better is found.
Solution solve_lds(const Instance& inst, const SearchConfig& config,
                   const std::vector<Decision>* ref = nullptr, const Solution* warm = nullptr,
                   const RunContext* ctx = nullptr);

}  // namespace pmsched
