#pragma once

#include "pmsched/model.hpp"

namespace pmsched {

// Reference results for desk-size instances, computed by exhaustive
// enumeration of every precedence-feasible job list. Both functions refuse
// instances with more than 9 jobs.
struct OracleResult {
  Time value = kTimeInfinity;
  Schedule schedule;
  long long enumerated = 0;  // complete (list, machine assignment) pairs visited
};

// Optimum over all semi-active schedules: every feasible insertion order
// crossed with every machine choice per job.
OracleResult brute_force(const Instance& inst, Criterion crit);

// Best value over feasible job lists decoded with decode_ect.
Time best_ect_list(const Instance& inst, Criterion crit);

}  // namespace pmsched
