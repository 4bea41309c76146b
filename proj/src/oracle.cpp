#include "pmsched/oracle.hpp"

#include <stdexcept>

namespace pmsched {

namespace {

constexpr int kOracleJobLimit = 9;

void check_size(const Instance& inst) {
  if (inst.n > kOracleJobLimit)
    throw std::invalid_argument("oracle: instance too large for exhaustive enumeration");
  if (auto err = validate_instance(inst)) throw std::invalid_argument("oracle: " + *err);
}

Time partial_value(const PartialSchedule& ps, Criterion crit) {
  return crit == Criterion::SumCompletion ? ps.scheduled_sum_completion()
                                          : ps.scheduled_max_lateness();
}

void enumerate(PartialSchedule& ps, Criterion crit, OracleResult& best) {
  const Instance& inst = ps.instance();
  if (ps.complete()) {
    ++best.enumerated;
    Time v = partial_value(ps, crit);
    if (v < best.value) {
      best.value = v;
      best.schedule = to_schedule(ps);
    }
    return;
  }
  for (int j = 0; j < inst.n; ++j) {
    if (!ps.ready(j)) continue;
    for (int q = 0; q < inst.m; ++q) {
      ps.extend(j, q);
      enumerate(ps, crit, best);
      ps.undo_last();
    }
  }
}

void enumerate_lists(PartialSchedule& ps, std::vector<int>& list, Criterion crit, Time& best) {
  const Instance& inst = ps.instance();
  if (static_cast<int>(list.size()) == inst.n) {
    Time v = evaluate(inst, decode_ect(inst, list), crit);
    best = std::min(best, v);
    return;
  }
  for (int j = 0; j < inst.n; ++j) {
    if (!ps.ready(j)) continue;
    ps.extend(j, 0);  // machine choice is irrelevant for feasible-order enumeration
    list.push_back(j);
    enumerate_lists(ps, list, crit, best);
    list.pop_back();
    ps.undo_last();
  }
}

}  // namespace

OracleResult brute_force(const Instance& inst, Criterion crit) {
  check_size(inst);
  OracleResult best;
  PartialSchedule ps(inst);
  enumerate(ps, crit, best);
  return best;
}

Time best_ect_list(const Instance& inst, Criterion crit) {
  check_size(inst);
  Time best = kTimeInfinity;
  PartialSchedule ps(inst);
  std::vector<int> list;
  list.reserve(inst.n);
  enumerate_lists(ps, list, crit, best);
  return best;
}

}  // namespace pmsched
