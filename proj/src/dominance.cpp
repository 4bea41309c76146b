#include "pmsched/dominance.hpp"

#include <algorithm>
#include <queue>

namespace pmsched {

void FlowNetwork::add_arc(int from, int to, Time cap) {
  adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
  adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
}

std::optional<FlowNetwork> build_flow_network(const PartialSchedule& ps) {
  const Instance& inst = ps.instance();
  const int p = ps.scheduled_count();
  if (p == 0) return std::nullopt;
  const int k = ps.order().back().job;
  if (ps.start_of(k) <= 0) return std::nullopt;
  const Time newStart = ps.start_of(k) - 1;
  if (newStart < inst.r[k]) return std::nullopt;
  for (int pr : inst.preds[k])
    if (ps.completion_of(pr) > newStart) return std::nullopt;

  std::vector<int> jobs;
  jobs.reserve(p);
  for (const Decision& dec : ps.order()) jobs.push_back(dec.job);
  std::vector<Time> startP(inst.n), compP(inst.n);
  for (int i : jobs) {
    startP[i] = ps.start_of(i);
    compP[i] = startP[i] + inst.p[i];
  }
  startP[k] = newStart;
  compP[k] = newStart + inst.p[k];

  std::vector<int> front = ps.front();
  std::vector<char> inFront(inst.n, 0);
  for (int f : front) inFront[f] = 1;
  // Chains in the certified reassignment, one per machine the prefix uses.
  // Opening an extra machine is not allowed: it would no longer be idle for
  // the jobs still waiting.
  const int used = static_cast<int>(front.size());

  // A job may end a chain only when the waiting jobs lose nothing by it:
  // front jobs already end one, and a non-front job qualifies if every
  // unscheduled job could start after it at least as early as after job k.
  // That covers the reassignment where k slips into a gap elsewhere and the
  // job before k inherits the front of k's machine. Without the check the
  // flow could trade the front for one with worse setups and cut off optima.
  std::vector<char> mayClose(inst.n, 0);
  for (int i : jobs) {
    if (inFront[i]) {
      mayClose[i] = 1;
      continue;
    }
    bool safe = true;
    for (int j = 0; j < inst.n && safe; ++j)
      if (!ps.is_scheduled(j))
        safe = compP[i] + inst.setup[i][j] <= ps.completion_of(k) + inst.setup[k][j];
    mayClose[i] = safe;
  }

  // Vertex layout: 0 source, 1 sink, 2 machine-pool start, 3 machine-pool
  // end, then (start, completion) per scheduled job.
  FlowNetwork net;
  net.vertexCount = 4 + 2 * p;
  net.source = 0;
  net.sink = 1;
  net.adj.assign(net.vertexCount, {});
  net.targetFlow = used + p;
  const int poolStart = 2, poolEnd = 3;
  auto startVertex = [](int idx) { return 4 + 2 * idx; };
  auto compVertex = [](int idx) { return 5 + 2 * idx; };

  net.add_arc(net.source, poolStart, used);
  net.add_arc(poolEnd, net.sink, used);
  for (int a = 0; a < p; ++a) {
    net.add_arc(net.source, compVertex(a), 1);
    net.add_arc(startVertex(a), net.sink, 1);
    net.add_arc(poolStart, startVertex(a), 1);
    if (mayClose[jobs[a]]) net.add_arc(compVertex(a), poolEnd, 1);
  }
  // Sequencing arcs. Front jobs other than k get no successors: they have to
  // stay last on their machines, or the front would change and continuations
  // would attach to different jobs with different setups. Job k itself may
  // hand its machine over (the mayClose check above keeps that safe).
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      int i = jobs[a], j = jobs[b];
      if (i == j || (inFront[i] && i != k)) continue;
      if (startP[j] >= compP[i] + inst.setup[i][j]) net.add_arc(compVertex(a), startVertex(b), 1);
    }
  return net;
}

Time max_flow(FlowNetwork& net) {
  // Edmonds-Karp; the network is tiny (O(n) vertices, unit capacities).
  Time total = 0;
  for (;;) {
    std::vector<int> prevVertex(net.vertexCount, -1), prevArc(net.vertexCount, -1);
    std::queue<int> q;
    q.push(net.source);
    prevVertex[net.source] = net.source;
    while (!q.empty() && prevVertex[net.sink] < 0) {
      int u = q.front();
      q.pop();
      for (size_t a = 0; a < net.adj[u].size(); ++a) {
        const auto& arc = net.adj[u][a];
        if (arc.cap <= 0 || prevVertex[arc.to] >= 0) continue;
        prevVertex[arc.to] = u;
        prevArc[arc.to] = static_cast<int>(a);
        q.push(arc.to);
      }
    }
    if (prevVertex[net.sink] < 0) return total;
    Time push = kTimeInfinity;
    for (int v = net.sink; v != net.source; v = prevVertex[v])
      push = std::min(push, net.adj[prevVertex[v]][prevArc[v]].cap);
    for (int v = net.sink; v != net.source; v = prevVertex[v]) {
      auto& arc = net.adj[prevVertex[v]][prevArc[v]];
      arc.cap -= push;
      net.adj[arc.to][arc.rev].cap += push;
    }
    total += push;
  }
}

DominanceVerdict maxflow_rule(const PartialSchedule& ps) {
  DominanceVerdict verdict;
  auto net = build_flow_network(ps);
  if (!net) return verdict;
  verdict.prune = max_flow(*net) == net->targetFlow;
  return verdict;
}

namespace {

// Replays `order` from scratch: jobs listed in forcedMachine keep that
// machine, the others take the earliest-completion machine. Returns nullopt
// when the order breaks a precedence arc.
std::optional<PartialSchedule> replay(const Instance& inst, const std::vector<int>& order,
                                      const std::vector<int>& forcedMachine) {
  PartialSchedule ps(inst);
  for (int job : order) {
    if (!ps.ready(job)) return std::nullopt;
    int machine = forcedMachine[job];
    if (machine < 0) {
      Time bestCompletion = kTimeInfinity;
      for (int q = 0; q < inst.m; ++q) {
        Time c = ps.start_time_if(job, q) + inst.p[job];
        if (c < bestCompletion) {
          bestCompletion = c;
          machine = q;
        }
      }
    }
    ps.extend(job, machine);
  }
  return ps;
}

}  // namespace

DominanceVerdict front_permutation_rule(const PartialSchedule& ps, Criterion crit) {
  (void)crit;
  DominanceVerdict verdict;
  const Instance& inst = ps.instance();
  std::vector<int> front = ps.front();
  if (front.size() < 2) return verdict;
  std::sort(front.begin(), front.end());

  std::vector<char> inFront(inst.n, 0);
  for (int f : front) inFront[f] = 1;
  std::vector<int> baseOrder;
  std::vector<int> frontSlots;  // positions of front jobs in the decision order
  baseOrder.reserve(ps.scheduled_count());
  for (int t = 0; t < ps.scheduled_count(); ++t) {
    int job = ps.order()[t].job;
    baseOrder.push_back(job);
    if (inFront[job]) frontSlots.push_back(t);
  }
  std::vector<int> forced(inst.n, -1);
  for (const Decision& dec : ps.order())
    if (!inFront[dec.job]) forced[dec.job] = dec.machine;

  std::vector<int> slotJobs;
  slotJobs.reserve(frontSlots.size());
  for (int t : frontSlots) slotJobs.push_back(baseOrder[t]);
  std::vector<int> perm = front;  // sorted; the do-loop covers every arrangement once
  do {
    if (perm == slotJobs) continue;  // unchanged arrangement cannot strictly improve
    std::vector<int> order = baseOrder;
    for (size_t s = 0; s < frontSlots.size(); ++s) order[frontSlots[s]] = perm[s];
    auto rebuilt = replay(inst, order, forced);
    if (!rebuilt) continue;
    std::vector<int> newFront = rebuilt->front();
    std::sort(newFront.begin(), newFront.end());
    if (newFront != front) continue;
    bool frontEarlier = false, delayed = false;
    for (int job : order) {
      Time before = ps.start_of(job), after = rebuilt->start_of(job);
      if (after > before) {
        delayed = true;
        break;
      }
      if (inFront[job] && after < before) frontEarlier = true;
    }
    if (delayed || !frontEarlier) continue;
    verdict.prune = true;
    verdict.witness = rebuilt->order();
    return verdict;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return verdict;
}

DominanceVerdict discrepancy_adapted(const Instance& inst, DominanceVerdict verdict,
                                     const std::vector<Decision>* refList, long long budget,
                                     Criterion crit, const CountingPolicy& policy) {
  if (!verdict.prune || verdict.witness.empty()) return verdict;
  long long cost = count_job_discrepancies(inst, verdict.witness, refList, crit, policy);
  if (cost > budget) verdict.prune = false;
  return verdict;
}

}  // namespace pmsched
