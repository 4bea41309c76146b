#include "pmsched/lns.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pmsched/bounds.hpp"

namespace pmsched {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

LnsResult run_lns(const Instance& inst, const LnsConfig& config) {
  if (auto err = validate_instance(inst)) throw std::invalid_argument("run_lns: " + *err);
  const int n = inst.n;
  const long long kMax = config.kMax > 0 ? config.kMax : n;
  const long long kLimit = config.kLimit > 0 ? config.kLimit : 3;
  const int x = config.x > 0 ? config.x : static_cast<int>(ceil_div(n, 5));
  const int depthLimit = config.depthLimit >= 0 ? config.depthLimit : static_cast<int>(ceil_div(n, 3));
  const int dBin = config.dBin >= 0 ? config.dBin : static_cast<int>(ceil_div(n, 4));

  SearchConfig base = config.search;
  base.timeLimitSeconds = 0;  // the shared context carries the deadline
  if (base.strategy == Strategy::DFS) base.strategy = Strategy::LDSlow;
  base.counting.mode = config.variant == LnsVariant::McCds ? JobCounting::MixedTop
                                                           : JobCounting::Binary;
  base.counting.binaryTopDepth = dBin;

  RunContext ctx;
  ctx.deadlineSeconds = config.timeLimitSeconds;

  LnsResult res;
  {
    PartialSchedule greedy = complete_greedy(PartialSchedule(inst), base.criterion);
    res.best.feasible = true;
    res.best.value = base.criterion == Criterion::SumCompletion
                         ? greedy.scheduled_sum_completion()
                         : greedy.scheduled_max_lateness();
    res.best.schedule = to_schedule(greedy);
    res.best.decisions = greedy.order();
  }
  SearchStats agg;
  agg.timeToBest = seconds_since(ctx.start);
  agg.improvements.emplace_back(agg.timeToBest, res.best.value);

  // Sweep state. Full-band sweeps run over [0, fullMax); HdCdds switches to
  // sliding bands of width x once k exceeds kLimit.
  const int fullMax = config.variant == LnsVariant::Cdds ? depthLimit
                                                         : std::numeric_limits<int>::max();
  long long k = 1;
  int bandLo = -1;  // -1: full band
  bool timedOut = false;

  while (k <= kMax) {
    if (ctx.deadlineSeconds > 0 && seconds_since(ctx.start) >= ctx.deadlineSeconds) {
      timedOut = true;
      break;
    }
    SearchConfig sweepCfg = base;
    sweepCfg.maxDiscrepancies = k;
    sweepCfg.discMinDepth = bandLo < 0 ? 0 : bandLo;
    sweepCfg.discMaxDepth = bandLo < 0 ? fullMax : bandLo + x;

    Solution out = solve_lds(inst, sweepCfg, &res.best.decisions, &res.best, &ctx);
    ++res.sweeps;
    agg.nodes += out.stats.nodes;
    agg.leaves += out.stats.leaves;
    agg.prunedBound += out.stats.prunedBound;
    agg.prunedEnergy += out.stats.prunedEnergy;
    agg.prunedFront += out.stats.prunedFront;
    agg.prunedFlow += out.stats.prunedFlow;
    agg.dominanceCancelled += out.stats.dominanceCancelled;
    agg.improvements.insert(agg.improvements.end(), out.stats.improvements.begin(),
                            out.stats.improvements.end());

    bool improved = out.feasible && out.value < res.best.value;
    if (config.onSweep) {
      SweepInfo info;
      info.sweep = res.sweeps;
      info.k = k;
      info.dMin = sweepCfg.discMinDepth;
      info.dMax = sweepCfg.discMaxDepth;
      info.improved = improved;
      info.bestValue = improved ? out.value : res.best.value;
      config.onSweep(info);
    }
    if (improved) {
      res.best.value = out.value;
      res.best.schedule = out.schedule;
      res.best.decisions = out.decisions;
      ++res.improvements;
      agg.timeToBest = out.stats.timeToBest;
      k = 1;
      bandLo = -1;
      if (!out.stats.completed) {
        timedOut = true;
        break;
      }
      continue;
    }
    if (!out.stats.completed) {
      timedOut = true;
      break;
    }
    if (config.variant == LnsVariant::HdCdds) {
      if (bandLo < 0) {
        // Full-band budgets up to kLimit, sliding bands beyond.
        ++k;
        bandLo = k > kLimit ? 0 : -1;
      } else {
        bandLo += x;
        if (bandLo >= n) {
          ++k;
          bandLo = 0;
        }
      }
    } else {
      ++k;
    }
  }

  res.exhausted = !timedOut && k > kMax;
  agg.completed = !timedOut;
  agg.totalTime = seconds_since(ctx.start);
  res.best.stats = agg;
  return res;
}

}  // namespace pmsched
