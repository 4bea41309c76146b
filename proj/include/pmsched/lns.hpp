#pragma once

#include <functional>

#include "pmsched/search.hpp"

namespace pmsched {

// Discrepancy-bounded large neighborhood search around an incumbent decision
// list. Every variant repeats budgeted sweeps (solve_lds with the incumbent
// as reference), widening the neighborhood while the incumbent resists and
// re-centering on it as soon as a sweep improves it.
enum class LnsVariant {
  Cds,     // widen the deviation budget k
  Cdds,    // fixed budget band limited to the top depthLimit levels
  HdCdds,  // budget phase first, then a depth band of width x sliding down
  McCds,   // like Cds but binary counting above dBin, rank counting below
};

struct SweepInfo {
  int sweep = 0;
  long long k = 0;   // deviation budget of this sweep
  int dMin = 0;      // depth band explored
  int dMax = 0;
  bool improved = false;
  Time bestValue = kTimeInfinity;
};

struct LnsConfig {
  SearchConfig search;  // criterion, strategy, toggles; counting mode is set per variant
  LnsVariant variant = LnsVariant::Cds;

  // Defaults (kMax = n, kLimit = 3, x = ceil(n/5), depthLimit = ceil(n/3),
  // dBin = ceil(n/4)) kick in when kMax, kLimit or x are <= 0 and when
  // depthLimit or dBin are negative; zero is meaningful for the latter two.
  long long kMax = -1;
  long long kLimit = -1;  // HdCdds: budget where the sliding-band phase takes over
  int x = -1;             // HdCdds: band width
  int depthLimit = -1;    // Cdds: deviations only above this depth
  int dBin = -1;          // McCds: depth where counting switches to rank

  double timeLimitSeconds = 0;  // <= 0: none
  std::function<void(const SweepInfo&)> onSweep;
};

struct LnsResult {
  Solution best;
  int sweeps = 0;
  int improvements = 0;  // sweeps that beat the incumbent
  bool exhausted = false;  // budget schedule ran out before the time limit
};

LnsResult run_lns(const Instance& inst, const LnsConfig& config);

}  // namespace pmsched
