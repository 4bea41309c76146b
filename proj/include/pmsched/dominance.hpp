#pragma once

#include <optional>
#include <vector>

#include "pmsched/branching.hpp"
#include "pmsched/model.hpp"

namespace pmsched {

struct DominanceVerdict {
  bool prune = false;
  // Decision list of the dominating prefix, when the rule produces one.
  std::vector<Decision> witness;
};

// Unit-capacity network whose maximum flow reaching used-machines + p
// certifies that the scheduled jobs admit a machine assignment with the same
// start times except the last scheduled job one unit earlier, using the same
// number of machines. Front jobs other than the moved one get no outgoing
// sequencing arcs (they stay last on their machines) and a non-front job may
// close a machine only if every unscheduled job could follow it at least as
// early as it could follow the moved job, so continuations of the certified
// schedule are never worse than continuations of the current one.
struct FlowNetwork {
  struct Arc {
    int to;
    Time cap;
    int rev;  // index of the reverse arc in adj[to]
  };
  int vertexCount = 0;
  int source = 0, sink = 0;
  std::vector<std::vector<Arc>> adj;
  int targetFlow = 0;

  void add_arc(int from, int to, Time cap);
};

// Builds the network for moving the last scheduled job one unit earlier.
// nullopt when the move is trivially infeasible: nothing scheduled, the job
// starts at 0 or the earlier start would violate its release date or a
// predecessor's completion.
std::optional<FlowNetwork> build_flow_network(const PartialSchedule& ps);

Time max_flow(FlowNetwork& net);

// Prunes when the network admits its target flow, i.e. a reassignment exists
// in which only the last scheduled job moves, one unit earlier, and no job
// still waiting can be delayed by the change.
DominanceVerdict maxflow_rule(const PartialSchedule& ps);

// Permutes the front jobs within the decision order. Non-front jobs keep
// their machines; front jobs are re-placed on the machine completing them
// earliest. Prunes when some permutation keeps the front set, starts one
// front job strictly earlier and delays no job.
DominanceVerdict front_permutation_rule(const PartialSchedule& ps, Criterion crit);

// Keeps a prune only when the witness stays within the discrepancy budget
// against the reference list, so the dominating prefix is itself reachable
// in the truncated tree.
DominanceVerdict discrepancy_adapted(const Instance& inst, DominanceVerdict verdict,
                                     const std::vector<Decision>* refList, long long budget,
                                     Criterion crit, const CountingPolicy& policy);

}  // namespace pmsched
