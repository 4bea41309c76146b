#pragma once

#include <vector>

#include "pmsched/model.hpp"

namespace pmsched {

// How a deviation from the first-ranked job is charged. Machine deviations
// are always charged by rank. MixedTop uses Binary above binaryTopDepth and
// NonBinary below it.
enum class JobCounting { Binary, NonBinary, MixedTop };

struct CountingPolicy {
  JobCounting mode = JobCounting::Binary;
  int binaryTopDepth = 0;  // MixedTop only: decisions at depth < binaryTopDepth count binary
};

// Cost charged for picking the job at `rank` while `depth` jobs are already
// scheduled.
long long job_deviation_cost(const CountingPolicy& policy, int rank, int depth);

// Ready jobs ordered by earliest start over all machines, ties by shortest
// processing time (SumCompletion) or earliest due date (MaxLateness), then
// by job id. When refJob is ready it is promoted to the first rank and the
// others keep their relative order.
std::vector<int> ranked_ready_jobs(const PartialSchedule& ps, Criterion crit,
                                   const int* refJob = nullptr);

// Machines ordered by the completion time the job would get, ties by index.
// When refMachine is given it is promoted to the first rank.
std::vector<int> ranked_machines(const PartialSchedule& ps, int job,
                                 const int* refMachine = nullptr);

// Job-level deviation cost of following `prefix` from the empty schedule,
// charging each step against the ordering above. When ref is given, its
// decisions are promoted to rank 0 for as long as the prefix agrees with it
// decision for decision.
long long count_job_discrepancies(const Instance& inst, const std::vector<Decision>& prefix,
                                  const std::vector<Decision>* ref, Criterion crit,
                                  const CountingPolicy& policy);

}  // namespace pmsched
