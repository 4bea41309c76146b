#include "pmsched/model.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace pmsched {

const char* to_string(Criterion c) {
  return c == Criterion::SumCompletion ? "sumc" : "lmax";
}

void Instance::prepare() {
  preds.assign(n, {});
  succs.assign(n, {});
  for (auto [a, b] : edges) {
    succs[a].push_back(b);
    preds[b].push_back(a);
  }
  // Kahn's algorithm; topo stays short on a cycle.
  topo.clear();
  std::vector<int> indeg(n, 0);
  for (int j = 0; j < n; ++j) indeg[j] = static_cast<int>(preds[j].size());
  std::queue<int> q;
  for (int j = 0; j < n; ++j)
    if (indeg[j] == 0) q.push(j);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    topo.push_back(u);
    for (int v : succs[u])
      if (--indeg[v] == 0) q.push(v);
  }
}

Time Instance::min_outgoing_setup(int i) const {
  Time best = kTimeInfinity;
  for (int j = 0; j < n; ++j)
    if (j != i) best = std::min(best, setup[i][j]);
  return best == kTimeInfinity ? 0 : best;
}

std::optional<std::string> validate_instance(const Instance& inst) {
  auto fail = [](const std::string& msg) { return std::optional<std::string>(msg); };
  if (inst.n < 1) return fail("n must be at least 1");
  if (inst.m < 1) return fail("m must be at least 1");
  const size_t n = static_cast<size_t>(inst.n);
  if (inst.p.size() != n || inst.r.size() != n || inst.d.size() != n)
    return fail("p, r, d must each hold n values");
  if (inst.setup.size() != n) return fail("setup matrix must have n rows");
  for (int i = 0; i < inst.n; ++i) {
    if (inst.setup[i].size() != n) return fail("setup matrix must have n columns per row");
    if (inst.p[i] < 1) return fail("processing times must be at least 1");
    if (inst.r[i] < 0) return fail("release dates must be non-negative");
    if (inst.setup[i][i] != 0) return fail("setup diagonal must be zero");
    for (int j = 0; j < inst.n; ++j)
      if (inst.setup[i][j] < 0) return fail("setup times must be non-negative");
  }
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < inst.n; ++k) {
        if (k == i || k == j) continue;
        if (inst.setup[i][j] > inst.setup[i][k] + inst.p[k] + inst.setup[k][j]) {
          std::ostringstream os;
          os << "setup triangle violated for (" << i + 1 << "," << j + 1 << ") via " << k + 1;
          return fail(os.str());
        }
      }
    }
  for (auto [a, b] : inst.edges) {
    if (a < 0 || a >= inst.n || b < 0 || b >= inst.n) return fail("edge endpoint out of range");
    if (a == b) return fail("self-loop in precedence arcs");
  }
  Instance copy = inst;
  copy.prepare();
  if (!copy.acyclic()) return fail("precedence arcs contain a cycle");
  return std::nullopt;
}

std::optional<std::string> validate_schedule(const Instance& inst, const Schedule& sched) {
  auto fail = [](const std::string& msg) { return std::optional<std::string>(msg); };
  const size_t n = static_cast<size_t>(inst.n);
  if (sched.start.size() != n || sched.machine.size() != n)
    return fail("schedule must assign every job a start and a machine");
  if (sched.sequence.size() != static_cast<size_t>(inst.m))
    return fail("schedule must list a sequence per machine");
  std::vector<int> seen(inst.n, 0);
  for (int q = 0; q < inst.m; ++q)
    for (int i : sched.sequence[q]) {
      if (i < 0 || i >= inst.n) return fail("sequence job index out of range");
      if (sched.machine[i] != q) return fail("sequence disagrees with machine assignment");
      if (seen[i]++) return fail("job appears twice in the sequences");
    }
  for (int i = 0; i < inst.n; ++i) {
    if (!seen[i]) return fail("job missing from the sequences");
    if (sched.machine[i] < 0 || sched.machine[i] >= inst.m) return fail("machine index out of range");
    if (sched.start[i] < inst.r[i]) return fail("job starts before its release date");
  }
  for (auto [a, b] : inst.edges)
    if (sched.start[b] < sched.start[a] + inst.p[a])
      return fail("precedence arc violated");
  for (int q = 0; q < inst.m; ++q)
    for (size_t t = 1; t < sched.sequence[q].size(); ++t) {
      int prev = sched.sequence[q][t - 1];
      int cur = sched.sequence[q][t];
      if (sched.start[cur] < sched.start[prev] + inst.p[prev] + inst.setup[prev][cur])
        return fail("machine sequence overlaps or skips a setup");
    }
  return std::nullopt;
}

Time evaluate(const Instance& inst, const Schedule& sched, Criterion crit) {
  if (auto err = validate_schedule(inst, sched))
    throw std::invalid_argument("evaluate: " + *err);
  if (crit == Criterion::SumCompletion) {
    Time total = 0;
    for (int i = 0; i < inst.n; ++i) total += sched.start[i] + inst.p[i];
    return total;
  }
  Time worst = kTimeNegInfinity;
  for (int i = 0; i < inst.n; ++i)
    worst = std::max(worst, sched.start[i] + inst.p[i] - inst.d[i]);
  return worst;
}

PartialSchedule::PartialSchedule(const Instance& inst)
    : inst_(&inst),
      start_(inst.n, -1),
      completion_(inst.n, -1),
      machineOf_(inst.n, -1),
      lastOn_(inst.m, -1),
      freeAt_(inst.m, 0),
      blockedPreds_(inst.n, 0) {
  order_.reserve(inst.n);
  for (int j = 0; j < inst.n; ++j)
    blockedPreds_[j] = static_cast<int>(inst.preds[j].size());
}

std::vector<int> PartialSchedule::front() const {
  std::vector<int> f;
  for (int q = 0; q < inst_->m; ++q)
    if (lastOn_[q] >= 0) f.push_back(lastOn_[q]);
  return f;
}

bool PartialSchedule::ready(int job) const {
  return !is_scheduled(job) && blockedPreds_[job] == 0;
}

std::vector<int> PartialSchedule::ready_jobs() const {
  std::vector<int> out;
  for (int j = 0; j < inst_->n; ++j)
    if (ready(j)) out.push_back(j);
  return out;
}

Time PartialSchedule::start_time_if(int job, int machine) const {
  Time s = inst_->r[job];
  for (int pr : inst_->preds[job]) s = std::max(s, completion_[pr]);
  int last = lastOn_[machine];
  Time avail = last < 0 ? freeAt_[machine] : freeAt_[machine] + inst_->setup[last][job];
  return std::max(s, avail);
}

void PartialSchedule::extend(int job, int machine) {
  if (job < 0 || job >= inst_->n || machine < 0 || machine >= inst_->m)
    throw std::invalid_argument("extend: index out of range");
  if (is_scheduled(job)) throw std::invalid_argument("extend: job already scheduled");
  if (blockedPreds_[job] != 0) throw std::invalid_argument("extend: job has unscheduled predecessors");
  Time s = start_time_if(job, machine);
  undo_.push_back({job, machine, lastOn_[machine], freeAt_[machine], maxL_});
  start_[job] = s;
  completion_[job] = s + inst_->p[job];
  machineOf_[job] = machine;
  lastOn_[machine] = job;
  freeAt_[machine] = completion_[job];
  order_.push_back({job, machine});
  for (int suc : inst_->succs[job]) --blockedPreds_[suc];
  sumC_ += completion_[job];
  maxL_ = std::max(maxL_, completion_[job] - inst_->d[job]);
}

void PartialSchedule::undo_last() {
  if (undo_.empty()) throw std::logic_error("undo_last: nothing to undo");
  Undo u = undo_.back();
  undo_.pop_back();
  order_.pop_back();
  for (int suc : inst_->succs[u.job]) ++blockedPreds_[suc];
  sumC_ -= completion_[u.job];
  maxL_ = u.prevMaxL;
  lastOn_[u.machine] = u.prevLast;
  freeAt_[u.machine] = u.prevFree;
  start_[u.job] = -1;
  completion_[u.job] = -1;
  machineOf_[u.job] = -1;
}

Schedule to_schedule(const PartialSchedule& ps) {
  if (!ps.complete()) throw std::invalid_argument("to_schedule: schedule is incomplete");
  const Instance& inst = ps.instance();
  Schedule out;
  out.start.resize(inst.n);
  out.machine.resize(inst.n);
  out.sequence.assign(inst.m, {});
  for (const Decision& dec : ps.order()) {
    out.start[dec.job] = ps.start_of(dec.job);
    out.machine[dec.job] = dec.machine;
    out.sequence[dec.machine].push_back(dec.job);
  }
  return out;
}

Schedule decode_ect(const Instance& inst, const std::vector<int>& list) {
  if (list.size() != static_cast<size_t>(inst.n))
    throw std::invalid_argument("decode_ect: list must contain every job exactly once");
  PartialSchedule ps(inst);
  for (int job : list) {
    if (job < 0 || job >= inst.n || ps.is_scheduled(job))
      throw std::invalid_argument("decode_ect: list must contain every job exactly once");
    if (!ps.ready(job))
      throw std::invalid_argument("decode_ect: list violates the precedence arcs");
    int bestMachine = 0;
    Time bestCompletion = kTimeInfinity;
    for (int q = 0; q < inst.m; ++q) {
      Time c = ps.start_time_if(job, q) + inst.p[job];
      if (c < bestCompletion) {
        bestCompletion = c;
        bestMachine = q;
      }
    }
    ps.extend(job, bestMachine);
  }
  return to_schedule(ps);
}

}  // namespace pmsched
