#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pmsched {

using Time = long long;

// Sentinels kept well away from overflow when added to real horizon values.
inline constexpr Time kTimeInfinity = (Time)1 << 60;
inline constexpr Time kTimeNegInfinity = -((Time)1 << 60);

enum class Criterion { SumCompletion, MaxLateness };

const char* to_string(Criterion c);

// Problem data: n jobs on m identical parallel machines. Job i carries a
// processing time p[i] >= 1, a release date r[i] >= 0 and a due date d[i].
// setup[i][j] is the time a machine needs between finishing i and starting j
// on the same row of the plan; setup[i][i] == 0. edges holds precedence pairs
// (i, j) meaning j cannot start before i completes, on any machine, with no
// setup across that relation.
struct Instance {
  int n = 0;
  int m = 0;
  std::vector<Time> p, r, d;
  std::vector<std::vector<Time>> setup;
  std::vector<std::pair<int, int>> edges;  // 0-based internally

  // Derived views, rebuilt by prepare(). topo stays empty when edges contain
  // a cycle so that validation can report it instead of crashing.
  std::vector<std::vector<int>> preds, succs;
  std::vector<int> topo;

  void prepare();
  bool acyclic() const { return static_cast<int>(topo.size()) == n; }

  // Cheapest setup leaving i over all other jobs, 0 when there is none.
  Time min_outgoing_setup(int i) const;
};

// First violated rule as text, or nullopt when the instance is well formed.
// Checks sizes, value ranges, setup diagonal, the weak triangle inequality
// s[i][j] <= s[i][k] + p[k] + s[k][j], edge index ranges and acyclicity.
std::optional<std::string> validate_instance(const Instance& inst);

// A complete assignment of every job to a machine, a start time and the
// per-machine processing order.
struct Schedule {
  std::vector<Time> start;
  std::vector<int> machine;
  std::vector<std::vector<int>> sequence;  // sequence[q] = jobs of machine q in order
};

std::optional<std::string> validate_schedule(const Instance& inst, const Schedule& sched);

// Objective of a complete feasible schedule. Throws std::invalid_argument
// when the schedule fails validate_schedule.
Time evaluate(const Instance& inst, const Schedule& sched, Criterion crit);

struct Decision {
  int job = -1;
  int machine = -1;
  bool operator==(const Decision&) const = default;
};

// Prefix of a schedule built by appending one (job, machine) decision at a
// time. Start times are semi-active: extend() places a job at the earliest
// start compatible with its release date, its predecessors' completions and
// the availability of the chosen machine including the setup after the
// machine's current last job.
class PartialSchedule {
 public:
  explicit PartialSchedule(const Instance& inst);

  const Instance& instance() const { return *inst_; }
  int scheduled_count() const { return static_cast<int>(order_.size()); }
  bool complete() const { return scheduled_count() == inst_->n; }
  bool is_scheduled(int job) const { return machineOf_[job] >= 0; }
  Time start_of(int job) const { return start_[job]; }
  Time completion_of(int job) const { return completion_[job]; }
  int machine_of(int job) const { return machineOf_[job]; }
  const std::vector<Decision>& order() const { return order_; }

  int last_job_on(int machine) const { return lastOn_[machine]; }
  Time machine_free_at(int machine) const { return freeAt_[machine]; }

  // Last job of every machine that holds at least one job, by machine index.
  std::vector<int> front() const;

  // A job is ready when unscheduled and all its predecessors are scheduled.
  bool ready(int job) const;
  std::vector<int> ready_jobs() const;

  // Earliest semi-active start of a ready job on the given machine.
  Time start_time_if(int job, int machine) const;

  void extend(int job, int machine);
  void undo_last();

  Time scheduled_sum_completion() const { return sumC_; }
  Time scheduled_max_lateness() const { return maxL_; }  // kTimeNegInfinity when empty

 private:
  const Instance* inst_;
  std::vector<Decision> order_;
  std::vector<Time> start_, completion_;
  std::vector<int> machineOf_;
  std::vector<int> lastOn_;
  std::vector<Time> freeAt_;
  std::vector<int> blockedPreds_;

  struct Undo {
    int job, machine, prevLast;
    Time prevFree;
    Time prevMaxL;
  };
  std::vector<Undo> undo_;
  Time sumC_ = 0;
  Time maxL_ = kTimeNegInfinity;
};

// Converts a completed prefix into a Schedule. Throws when incomplete.
Schedule to_schedule(const PartialSchedule& ps);

// List scheduling: jobs are inserted in list order, each on the machine that
// completes it earliest (ties to the lowest machine index). The list must
// contain every job exactly once and respect the precedence arcs.
Schedule decode_ect(const Instance& inst, const std::vector<int>& list);

}  // namespace pmsched
