#pragma once

#include <optional>
#include <vector>

#include "pmsched/model.hpp"

namespace pmsched {

// Adjusted time windows of the unscheduled jobs at a node. rPrime[i] is a
// valid lower bound on the start of i in any completion of the node; dPrime
// is the latest completion that keeps the node able to match zBest under
// MaxLateness (kTimeInfinity under SumCompletion). Entries of scheduled jobs
// hold their actual start-based values and are not read by the bounds.
struct TimeWindows {
  std::vector<Time> rPrime, dPrime;
};

TimeWindows propagate_windows(const Instance& inst, const PartialSchedule& ps, Time zBest,
                              Criterion crit);

// Critical-path bound. SumCompletion: completions of the scheduled jobs plus
// rPrime[i] + p[i] per unscheduled job. MaxLateness: worst lateness already
// realized versus the best still reachable per unscheduled job.
Time lb_cp(const Instance& inst, const PartialSchedule& ps, Criterion crit,
           const TimeWindows& win);

// Completes the prefix by repeatedly taking the first-ranked (job, machine)
// decision of the branching order.
PartialSchedule complete_greedy(PartialSchedule ps, Criterion crit);
Schedule upper_bound(const PartialSchedule& ps, Criterion crit);

// Single-machine preemptive shortest-remaining-work schedule; exact integer
// arithmetic. Returns the completion time per job.
std::vector<Time> srpt_completions(const std::vector<Time>& release,
                                   const std::vector<Time>& work);

// Lower bound on the total completion time, exact as the fraction num / den
// (den is the machine count; no floating point involved).
struct RationalBound {
  Time num = 0;
  int den = 1;
};
inline bool bound_reaches(const RationalBound& b, Time incumbent) {
  return b.num >= incumbent * b.den;
}

// Relaxation of the remaining work: one machine, preemption allowed, job i
// shrunk to p[i]/m plus a shared share of its cheapest outgoing setup. The
// per-position maxima against r'[i] + p[i] repair the weakest completions.
RationalBound lb_srpt(const Instance& inst, const PartialSchedule& ps, const TimeWindows& win);

// Work that must run inside the interval [t1, t2] versus the capacity the
// machines can produce there. alpha is the number of mandatory setups, i.e.
// how many consuming jobs exceed the machine count.
struct EnergyInterval {
  Time t1 = 0, t2 = 0;
  std::vector<int> consuming;
  Time consumed = 0;
  Time setupEnergy = 0;
  Time produced = 0;
  int alpha = 0;
};

// nullopt when no unscheduled job exists or the interval is empty (t2 <= t1).
std::optional<EnergyInterval> compute_energy(const Instance& inst, const PartialSchedule& ps,
                                             const TimeWindows& win);

// True when the mandatory work plus mandatory setups exceed what the
// machines can produce inside the interval, i.e. the node cannot match
// zBest under MaxLateness.
bool energetic_prune(const Instance& inst, const PartialSchedule& ps, const TimeWindows& win);

}  // namespace pmsched
