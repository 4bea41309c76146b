#include "pmsched/bounds.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "pmsched/branching.hpp"

namespace pmsched {

TimeWindows propagate_windows(const Instance& inst, const PartialSchedule& ps, Time zBest,
                              Criterion crit) {
  TimeWindows win;
  win.rPrime.assign(inst.n, 0);
  win.dPrime.assign(inst.n, kTimeInfinity);
  // Releases tighten forward along the arcs: a scheduled predecessor
  // contributes its actual completion, an unscheduled one its own adjusted
  // release plus processing time.
  for (int i : inst.topo) {
    if (ps.is_scheduled(i)) {
      win.rPrime[i] = ps.start_of(i);
      continue;
    }
    Time r = inst.r[i];
    for (int pr : inst.preds[i])
      r = std::max(r, ps.is_scheduled(pr) ? ps.completion_of(pr) : win.rPrime[pr] + inst.p[pr]);
    win.rPrime[i] = r;
  }
  if (crit != Criterion::MaxLateness) return win;
  // Deadlines tighten backward: completing later than zBest + d[i] cannot
  // match the incumbent, and successors push their own deadline down.
  for (auto it = inst.topo.rbegin(); it != inst.topo.rend(); ++it) {
    int i = *it;
    if (ps.is_scheduled(i)) {
      win.dPrime[i] = ps.completion_of(i);
      continue;
    }
    Time dl = zBest >= kTimeInfinity ? kTimeInfinity : zBest + inst.d[i];
    for (int suc : inst.succs[i])
      if (!ps.is_scheduled(suc) && win.dPrime[suc] < kTimeInfinity)
        dl = std::min(dl, win.dPrime[suc] - inst.p[suc]);
    win.dPrime[i] = dl;
  }
  return win;
}

Time lb_cp(const Instance& inst, const PartialSchedule& ps, Criterion crit,
           const TimeWindows& win) {
  if (crit == Criterion::SumCompletion) {
    Time total = ps.scheduled_sum_completion();
    for (int i = 0; i < inst.n; ++i)
      if (!ps.is_scheduled(i)) total += win.rPrime[i] + inst.p[i];
    return total;
  }
  Time worst = ps.scheduled_max_lateness();
  for (int i = 0; i < inst.n; ++i)
    if (!ps.is_scheduled(i)) worst = std::max(worst, win.rPrime[i] + inst.p[i] - inst.d[i]);
  return worst;
}

PartialSchedule complete_greedy(PartialSchedule ps, Criterion crit) {
  while (!ps.complete()) {
    std::vector<int> jobs = ranked_ready_jobs(ps, crit);
    if (jobs.empty()) throw std::logic_error("complete_greedy: no ready job on incomplete prefix");
    int job = jobs.front();
    ps.extend(job, ranked_machines(ps, job).front());
  }
  return ps;
}

Schedule upper_bound(const PartialSchedule& ps, Criterion crit) {
  return to_schedule(complete_greedy(ps, crit));
}

std::vector<Time> srpt_completions(const std::vector<Time>& release,
                                   const std::vector<Time>& work) {
  const int n = static_cast<int>(release.size());
  if (work.size() != release.size())
    throw std::invalid_argument("srpt_completions: mismatched inputs");
  std::vector<int> byRelease(n);
  for (int i = 0; i < n; ++i) byRelease[i] = i;
  std::sort(byRelease.begin(), byRelease.end(), [&](int a, int b) {
    if (release[a] != release[b]) return release[a] < release[b];
    return a < b;
  });
  using Entry = std::pair<Time, int>;  // (remaining work, job)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> active;
  std::vector<Time> completion(n, 0);
  Time now = 0;
  int next = 0;
  while (next < n || !active.empty()) {
    if (active.empty()) now = std::max(now, release[byRelease[next]]);
    while (next < n && release[byRelease[next]] <= now) {
      active.push({work[byRelease[next]], byRelease[next]});
      ++next;
    }
    auto [rem, job] = active.top();
    active.pop();
    Time horizon = next < n ? release[byRelease[next]] : kTimeInfinity;
    Time slice = std::min(rem, horizon - now);
    now += slice;
    rem -= slice;
    if (rem == 0)
      completion[job] = now;
    else
      active.push({rem, job});
  }
  return completion;
}

RationalBound lb_srpt(const Instance& inst, const PartialSchedule& ps, const TimeWindows& win) {
  std::vector<int> unsched;
  for (int i = 0; i < inst.n; ++i)
    if (!ps.is_scheduled(i)) unsched.push_back(i);
  RationalBound bound;
  bound.den = inst.m;
  bound.num = ps.scheduled_sum_completion() * inst.m;
  if (unsched.empty()) return bound;
  // Everything is scaled by m so the relaxed works p[i]/m + s_i/m stay
  // integral: releases become m*r', works p[i] + s_i.
  const int u = static_cast<int>(unsched.size());
  std::vector<Time> sMin(u, 0), release(u), work(u), a(u);
  for (int k = 0; k < u; ++k) {
    int i = unsched[k];
    Time best = kTimeInfinity;
    for (int j : unsched)
      if (j != i) best = std::min(best, inst.setup[i][j]);
    sMin[k] = best == kTimeInfinity ? 0 : best;
    release[k] = win.rPrime[i] * inst.m;
    work[k] = inst.p[i] + sMin[k];
    a[k] = (inst.p[i] + win.rPrime[i]) * inst.m + sMin[k];
  }
  std::vector<Time> completion = srpt_completions(release, work);
  std::sort(completion.begin(), completion.end());
  std::sort(a.begin(), a.end());
  // The relaxation inflates every completion by up to the job's full cheapest
  // setup (the machine stays blocked for s_i of real time after the job, no
  // matter how the work is split), so the full s_i per job comes back off.
  // Subtracting only the s_i/m share that was added to the work can push the
  // bound above the true optimum on multi-machine instances.
  for (int k = 0; k < u; ++k) {
    bound.num += std::max(completion[k], a[k]);
    bound.num -= sMin[k] * inst.m;
  }
  return bound;
}

std::optional<EnergyInterval> compute_energy(const Instance& inst, const PartialSchedule& ps,
                                             const TimeWindows& win) {
  EnergyInterval e;
  Time bestSpan = kTimeInfinity;
  int spanJob = -1;
  e.t1 = kTimeInfinity;
  for (int i = 0; i < inst.n; ++i) {
    if (ps.is_scheduled(i)) continue;
    e.t1 = std::min(e.t1, win.rPrime[i]);
    if (win.dPrime[i] >= kTimeInfinity) continue;
    Time span = win.dPrime[i] - win.rPrime[i];
    if (spanJob < 0 || span < bestSpan ||
        (span == bestSpan && win.dPrime[i] < win.dPrime[spanJob])) {
      bestSpan = span;
      spanJob = i;
    }
  }
  if (spanJob < 0 || e.t1 >= kTimeInfinity) return std::nullopt;
  e.t2 = win.dPrime[spanJob];
  if (e.t2 <= e.t1) return std::nullopt;
  const Time len = e.t2 - e.t1;
  for (int i = 0; i < inst.n; ++i) {
    if (ps.is_scheduled(i)) continue;
    // Mandatory part inside [t1, t2]: the overlap left when the job is
    // shifted as early and as late as its window allows.
    Time tail = win.rPrime[i] + inst.p[i] - e.t1;
    Time head = win.dPrime[i] >= kTimeInfinity ? inst.p[i] : e.t2 - win.dPrime[i] + inst.p[i];
    Time part = std::max<Time>(0, std::min(std::min(inst.p[i], len), std::min(tail, head)));
    if (part > 0) {
      e.consuming.push_back(i);
      e.consumed += part;
    }
  }
  e.alpha = std::max(0, static_cast<int>(e.consuming.size()) - inst.m);
  if (e.alpha > 0) {
    std::vector<Time> setups;
    setups.reserve(e.consuming.size() * (e.consuming.size() - 1));
    for (int i : e.consuming)
      for (int j : e.consuming)
        if (i != j) setups.push_back(inst.setup[i][j]);
    std::nth_element(setups.begin(), setups.begin() + e.alpha, setups.end());
    for (int k = 0; k < e.alpha; ++k) e.setupEnergy += setups[k];
  }
  e.produced = static_cast<Time>(inst.m) * len;
  // Machines still busy with an already placed job cannot produce during the
  // overlap of that job with the interval.
  for (int q = 0; q < inst.m; ++q) {
    int f = ps.last_job_on(q);
    if (f < 0) continue;
    Time overlap = std::min(ps.completion_of(f), e.t2) - std::max(ps.start_of(f), e.t1);
    if (overlap > 0) e.produced -= overlap;
  }
  return e;
}

bool energetic_prune(const Instance& inst, const PartialSchedule& ps, const TimeWindows& win) {
  auto e = compute_energy(inst, ps, win);
  if (!e) return false;
  return e->consumed + e->setupEnergy > e->produced;
}

}  // namespace pmsched
