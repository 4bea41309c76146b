#include "pmsched/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmsched {

long long job_deviation_cost(const CountingPolicy& policy, int rank, int depth) {
  if (rank <= 0) return 0;
  switch (policy.mode) {
    case JobCounting::Binary:
      return 1;
    case JobCounting::NonBinary:
      return rank;
    case JobCounting::MixedTop:
      return depth < policy.binaryTopDepth ? 1 : rank;
  }
  return rank;
}

std::vector<int> ranked_ready_jobs(const PartialSchedule& ps, Criterion crit, const int* refJob) {
  const Instance& inst = ps.instance();
  struct Key {
    Time est;
    Time tie;
    int job;
  };
  std::vector<Key> keys;
  for (int j = 0; j < inst.n; ++j) {
    if (!ps.ready(j)) continue;
    Time est = kTimeInfinity;
    for (int q = 0; q < inst.m; ++q) est = std::min(est, ps.start_time_if(j, q));
    keys.push_back({est, crit == Criterion::SumCompletion ? inst.p[j] : inst.d[j], j});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.est != b.est) return a.est < b.est;
    if (a.tie != b.tie) return a.tie < b.tie;
    return a.job < b.job;
  });
  std::vector<int> out;
  out.reserve(keys.size());
  for (const Key& k : keys) out.push_back(k.job);
  if (refJob) {
    auto it = std::find(out.begin(), out.end(), *refJob);
    if (it != out.end()) std::rotate(out.begin(), it, it + 1);
  }
  return out;
}

std::vector<int> ranked_machines(const PartialSchedule& ps, int job, const int* refMachine) {
  const Instance& inst = ps.instance();
  struct Key {
    Time completion;
    int machine;
  };
  std::vector<Key> keys;
  keys.reserve(inst.m);
  for (int q = 0; q < inst.m; ++q) keys.push_back({ps.start_time_if(job, q) + inst.p[job], q});
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.completion != b.completion) return a.completion < b.completion;
    return a.machine < b.machine;
  });
  std::vector<int> out;
  out.reserve(keys.size());
  for (const Key& k : keys) out.push_back(k.machine);
  if (refMachine) {
    auto it = std::find(out.begin(), out.end(), *refMachine);
    if (it != out.end()) std::rotate(out.begin(), it, it + 1);
  }
  return out;
}

long long count_job_discrepancies(const Instance& inst, const std::vector<Decision>& prefix,
                                  const std::vector<Decision>* ref, Criterion crit,
                                  const CountingPolicy& policy) {
  PartialSchedule ps(inst);
  long long total = 0;
  bool onRefPath = ref != nullptr;
  for (size_t t = 0; t < prefix.size(); ++t) {
    const Decision& dec = prefix[t];
    const int* refJob = nullptr;
    if (onRefPath && t < ref->size()) refJob = &(*ref)[t].job;
    std::vector<int> jobs = ranked_ready_jobs(ps, crit, refJob);
    auto it = std::find(jobs.begin(), jobs.end(), dec.job);
    if (it == jobs.end()) throw std::invalid_argument("count_job_discrepancies: list not feasible");
    int rank = static_cast<int>(it - jobs.begin());
    total += job_deviation_cost(policy, rank, static_cast<int>(t));
    if (onRefPath && (t >= ref->size() || !((*ref)[t] == dec))) onRefPath = false;
    ps.extend(dec.job, dec.machine);
  }
  return total;
}

}  // namespace pmsched
