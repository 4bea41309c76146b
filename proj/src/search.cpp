#include "pmsched/search.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "pmsched/bounds.hpp"
#include "pmsched/dominance.hpp"

namespace pmsched {

std::vector<BranchChild> branch(const PartialSchedule& ps, const SearchConfig& config,
                                const Decision* refNext) {
  const int depth = ps.scheduled_count();
  const int* refJob = refNext ? &refNext->job : nullptr;
  std::vector<int> jobs = ranked_ready_jobs(ps, config.criterion, refJob);
  std::vector<BranchChild> out;
  out.reserve(jobs.size() * ps.instance().m);
  for (int jr = 0; jr < static_cast<int>(jobs.size()); ++jr) {
    int job = jobs[jr];
    const int* refMachine =
        refNext && job == refNext->job ? &refNext->machine : nullptr;
    std::vector<int> machines = ranked_machines(ps, job, refMachine);
    for (int mr = 0; mr < static_cast<int>(machines.size()); ++mr) {
      BranchChild child;
      child.job = job;
      child.machine = machines[mr];
      child.jobRank = jr;
      child.machineRank = mr;
      child.deviationCost = job_deviation_cost(config.counting, jr, depth) + mr;
      child.start = ps.start_time_if(job, machines[mr]);
      out.push_back(child);
    }
  }
  return out;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

enum class Fate { Expand, Bound, Energy, Front, Flow };

struct Searcher {
  const Instance& inst;
  const SearchConfig& cfg;
  RunContext ctx;
  PartialSchedule ps;
  Solution best;
  const std::vector<Decision>* ref = nullptr;
  bool outOfTime = false;

  Searcher(const Instance& instance, const SearchConfig& config, const RunContext* external)
      : inst(instance), cfg(config), ps(instance) {
    if (external) ctx = *external;
  }

  bool time_up() {
    if (outOfTime) return true;
    if (ctx.deadlineSeconds <= 0) return false;
    if (seconds_since(ctx.start) >= ctx.deadlineSeconds) {
      outOfTime = true;
      best.stats.completed = false;
    }
    return outOfTime;
  }

  Time partial_value() const {
    return cfg.criterion == Criterion::SumCompletion ? ps.scheduled_sum_completion()
                                                     : ps.scheduled_max_lateness();
  }

  void seed(const Solution* warm) {
    if (warm && warm->feasible) {
      best = *warm;
      best.stats = SearchStats{};
      return;
    }
    PartialSchedule greedy = complete_greedy(PartialSchedule(inst), cfg.criterion);
    best.feasible = true;
    best.value = cfg.criterion == Criterion::SumCompletion ? greedy.scheduled_sum_completion()
                                                           : greedy.scheduled_max_lateness();
    best.schedule = to_schedule(greedy);
    best.decisions = greedy.order();
    best.stats.timeToBest = seconds_since(ctx.start);
    best.stats.improvements.emplace_back(best.stats.timeToBest, best.value);
  }

  void visit_leaf() {
    ++best.stats.leaves;
    if (cfg.onLeaf) cfg.onLeaf(ps.order());
    Time v = partial_value();
    if (v < best.value) {
      best.value = v;
      best.feasible = true;
      best.schedule = to_schedule(ps);
      best.decisions = ps.order();
      best.stats.timeToBest = seconds_since(ctx.start);
      best.stats.improvements.emplace_back(best.stats.timeToBest, v);
    }
  }

  Fate assess() {
    const bool haveIncumbent = best.feasible && best.value < kTimeInfinity;
    Time zEff = best.value;
    if (cfg.energeticZBest && *cfg.energeticZBest < zEff) zEff = *cfg.energeticZBest;
    const bool needWindows =
        cfg.useLbCp || cfg.useLbSrpt || (cfg.criterion == Criterion::MaxLateness && cfg.useEnergetic);
    if (haveIncumbent && needWindows) {
      TimeWindows win = propagate_windows(inst, ps, zEff, cfg.criterion);
      if (cfg.useLbCp && lb_cp(inst, ps, cfg.criterion, win) >= best.value) return Fate::Bound;
      if (cfg.criterion == Criterion::SumCompletion && cfg.useLbSrpt &&
          bound_reaches(lb_srpt(inst, ps, win), best.value))
        return Fate::Bound;
      if (cfg.criterion == Criterion::MaxLateness && cfg.useEnergetic && zEff < kTimeInfinity &&
          energetic_prune(inst, ps, win))
        return Fate::Energy;
    }
    if (ps.scheduled_count() > 0) {
      if (cfg.useFrontRule) {
        DominanceVerdict v = front_permutation_rule(ps, cfg.criterion);
        if (v.prune && cfg.useAdaptedRules) {
          v = discrepancy_adapted(inst, std::move(v), ref, cfg.maxDiscrepancies, cfg.criterion,
                                  cfg.counting);
          if (!v.prune) ++best.stats.dominanceCancelled;
        }
        if (v.prune) return Fate::Front;
      }
      if (cfg.useMaxflowRule && maxflow_rule(ps).prune) return Fate::Flow;
    }
    return Fate::Expand;
  }

  void tally(Fate f) {
    switch (f) {
      case Fate::Bound: ++best.stats.prunedBound; break;
      case Fate::Energy: ++best.stats.prunedEnergy; break;
      case Fate::Front: ++best.stats.prunedFront; break;
      case Fate::Flow: ++best.stats.prunedFlow; break;
      case Fate::Expand: break;
    }
  }

  bool deviation_allowed(int depth) const {
    return cfg.discMinDepth <= depth && depth < cfg.discMaxDepth;
  }

  void dfs(long long disc, bool onPath, int depth) {
    if (time_up()) return;
    ++best.stats.nodes;
    if (ps.complete()) {
      visit_leaf();
      return;
    }
    Fate f = assess();
    if (f != Fate::Expand) {
      tally(f);
      return;
    }
    const Decision* refNext =
        onPath && ref && depth < static_cast<int>(ref->size()) ? &(*ref)[depth] : nullptr;
    for (const BranchChild& child : branch(ps, cfg, refNext)) {
      if (time_up()) return;
      if (child.deviationCost > 0 && !deviation_allowed(depth)) continue;
      if (disc + child.deviationCost > cfg.maxDiscrepancies) continue;
      bool childOnPath = refNext && Decision{child.job, child.machine} == *refNext;
      ps.extend(child.job, child.machine);
      dfs(disc + child.deviationCost, childOnPath, depth + 1);
      ps.undo_last();
    }
  }

  void best_first() {
    struct QNode {
      long long disc = 0;
      int depth = 0;
      long long seq = 0;
      bool onPath = false;
      std::vector<Decision> prefix;
    };
    const bool deepFirst = cfg.strategy == Strategy::LDSlow;
    auto later = [deepFirst](const QNode& a, const QNode& b) {
      if (a.disc != b.disc) return a.disc > b.disc;
      if (a.depth != b.depth) return deepFirst ? a.depth < b.depth : a.depth > b.depth;
      return a.seq > b.seq;
    };
    std::priority_queue<QNode, std::vector<QNode>, decltype(later)> open(later);
    long long seq = 0;
    open.push({0, 0, seq++, ref != nullptr, {}});
    while (!open.empty()) {
      if (time_up()) return;
      QNode node = open.top();
      open.pop();
      ps = PartialSchedule(inst);
      for (const Decision& dec : node.prefix) ps.extend(dec.job, dec.machine);
      ++best.stats.nodes;
      if (ps.complete()) {
        visit_leaf();
        continue;
      }
      Fate f = assess();
      if (f != Fate::Expand) {
        tally(f);
        continue;
      }
      const Decision* refNext =
          node.onPath && ref && node.depth < static_cast<int>(ref->size()) ? &(*ref)[node.depth]
                                                                           : nullptr;
      for (const BranchChild& child : branch(ps, cfg, refNext)) {
        if (child.deviationCost > 0 && !deviation_allowed(node.depth)) continue;
        if (node.disc + child.deviationCost > cfg.maxDiscrepancies) continue;
        QNode next;
        next.disc = node.disc + child.deviationCost;
        next.depth = node.depth + 1;
        next.seq = seq++;
        next.onPath = refNext && Decision{child.job, child.machine} == *refNext;
        next.prefix = node.prefix;
        next.prefix.push_back({child.job, child.machine});
        open.push(std::move(next));
      }
    }
  }

  Solution finish() {
    best.stats.totalTime = seconds_since(ctx.start);
    return std::move(best);
  }
};

}  // namespace

Solution solve_exact(const Instance& inst, const SearchConfig& config) {
  if (auto err = validate_instance(inst)) throw std::invalid_argument("solve_exact: " + *err);
  SearchConfig cfg = config;
  cfg.strategy = Strategy::DFS;
  cfg.maxDiscrepancies = kUnlimitedDiscrepancies;
  cfg.discMinDepth = 0;
  cfg.discMaxDepth = std::numeric_limits<int>::max();
  RunContext ctx;
  ctx.deadlineSeconds = cfg.timeLimitSeconds;
  Searcher s(inst, cfg, &ctx);
  s.seed(nullptr);
  s.dfs(0, false, 0);
  return s.finish();
}

Solution solve_lds(const Instance& inst, const SearchConfig& config,
                   const std::vector<Decision>* ref, const Solution* warm,
                   const RunContext* ctx) {
  if (auto err = validate_instance(inst)) throw std::invalid_argument("solve_lds: " + *err);
  RunContext local;
  local.deadlineSeconds = config.timeLimitSeconds;
  Searcher s(inst, config, ctx ? ctx : &local);
  s.ref = ref;
  s.seed(warm);
  if (config.strategy == Strategy::LDStop || config.strategy == Strategy::LDSlow)
    s.best_first();
  else
    s.dfs(0, ref != nullptr, 0);
  return s.finish();
}

}  // namespace pmsched
