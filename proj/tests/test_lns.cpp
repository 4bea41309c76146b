#include <doctest.h>

#include "helpers.hpp"
#include "pmsched/bounds.hpp"
#include "pmsched/lns.hpp"
#include "pmsched/oracle.hpp"

using namespace pmsched;
using pmsched::testing::five_job_instance;
using pmsched::testing::four_job_instance;
using pmsched::testing::small_random;

namespace {

Time greedy_value(const Instance& inst, Criterion crit) {
  PartialSchedule ps = complete_greedy(PartialSchedule(inst), crit);
  return crit == Criterion::SumCompletion ? ps.scheduled_sum_completion()
                                          : ps.scheduled_max_lateness();
}

// Fully symmetric: unit jobs, uniform setups, no windows. Every balanced
// assignment costs the same, so the greedy start is already optimal.
Instance uniform_instance() {
  Instance inst;
  inst.n = 4;
  inst.m = 2;
  inst.p.assign(4, 1);
  inst.r.assign(4, 0);
  inst.d.assign(4, 0);
  inst.setup.assign(4, std::vector<Time>(4, 1));
  for (int i = 0; i < 4; ++i) inst.setup[i][i] = 0;
  inst.prepare();
  return inst;
}

}  // namespace

TEST_CASE("neighborhood widening reaches the optimum on small instances") {
  for (LnsVariant variant : {LnsVariant::Cds, LnsVariant::McCds}) {
    Instance inst = five_job_instance();
    for (Criterion crit : {Criterion::SumCompletion, Criterion::MaxLateness}) {
      LnsConfig cfg;
      cfg.search.criterion = crit;
      cfg.variant = variant;
      LnsResult res = run_lns(inst, cfg);
      INFO("criterion ", to_string(crit));
      CHECK(res.best.value == brute_force(inst, crit).value);
      CHECK(res.exhausted);
    }
  }
  for (int idx = 0; idx < 5; ++idx) {
    Instance inst = small_random(idx, 6);
    LnsConfig cfg;
    LnsResult res = run_lns(inst, cfg);
    CHECK(res.best.value == brute_force(inst, Criterion::SumCompletion).value);
  }
}

TEST_CASE("runs are deterministic") {
  Instance inst = small_random(4, 7);
  LnsConfig cfg;
  cfg.variant = LnsVariant::HdCdds;
  LnsResult a = run_lns(inst, cfg);
  LnsResult b = run_lns(inst, cfg);
  CHECK(a.best.value == b.best.value);
  CHECK(a.sweeps == b.sweeps);
  CHECK(a.best.stats.nodes == b.best.stats.nodes);
  CHECK(a.best.decisions == b.best.decisions);
}

TEST_CASE("improvements only ever go down") {
  Instance inst = small_random(5, 7);
  LnsConfig cfg;
  LnsResult res = run_lns(inst, cfg);
  const auto& log = res.best.stats.improvements;
  REQUIRE(!log.empty());
  CHECK(log.front().second == greedy_value(inst, Criterion::SumCompletion));
  for (size_t i = 1; i < log.size(); ++i) {
    CHECK(log[i].second < log[i - 1].second);
    CHECK(log[i].first >= log[i - 1].first);
  }
  CHECK(log.back().second == res.best.value);
  CHECK(res.best.stats.timeToBest <= res.best.stats.totalTime);
}

TEST_CASE("an improving sweep re-centers the neighborhood") {
  Instance inst = four_job_instance(true);  // greedy lands at 17, optimum is 11
  LnsConfig cfg;
  std::vector<SweepInfo> log;
  cfg.onSweep = [&log](const SweepInfo& info) { log.push_back(info); };
  LnsResult res = run_lns(inst, cfg);
  REQUIRE(res.improvements > 0);
  CHECK(res.best.value == 11);
  for (size_t i = 0; i + 1 < log.size(); ++i) {
    if (log[i].improved)
      CHECK(log[i + 1].k == 1);
    else
      CHECK(log[i + 1].k >= log[i].k);
  }
}

TEST_CASE("depth limited variant degenerates cleanly") {
  Instance inst = five_job_instance();
  SUBCASE("zero depth leaves the start solution untouched") {
    LnsConfig cfg;
    cfg.variant = LnsVariant::Cdds;
    cfg.depthLimit = 0;
    LnsResult res = run_lns(inst, cfg);
    CHECK(res.best.value == greedy_value(inst, Criterion::SumCompletion));
    CHECK(res.exhausted);
    CHECK(res.improvements == 0);
  }
  SUBCASE("full depth behaves exactly like the plain variant") {
    LnsConfig cdds;
    cdds.variant = LnsVariant::Cdds;
    cdds.depthLimit = inst.n;
    LnsResult a = run_lns(inst, cdds);
    LnsConfig cds;
    cds.variant = LnsVariant::Cds;
    LnsResult b = run_lns(inst, cds);
    CHECK(a.best.value == b.best.value);
    CHECK(a.sweeps == b.sweeps);
    CHECK(a.best.stats.nodes == b.best.stats.nodes);
  }
}

TEST_CASE("band sliding follows the documented schedule") {
  // greedy is already optimal here, so no sweep improves and the full budget
  // and band schedule runs to exhaustion
  Instance inst = uniform_instance();
  LnsConfig cfg;
  cfg.variant = LnsVariant::HdCdds;
  cfg.kLimit = 1;
  cfg.x = 2;
  cfg.kMax = 3;
  std::vector<SweepInfo> log;
  cfg.onSweep = [&log](const SweepInfo& info) { log.push_back(info); };
  LnsResult res = run_lns(inst, cfg);
  CHECK(res.improvements == 0);
  CHECK(res.exhausted);
  REQUIRE(log.size() == 5);
  long long ks[5] = {1, 2, 2, 3, 3};
  int lows[5] = {0, 0, 2, 0, 2};
  for (int i = 0; i < 5; ++i) {
    CHECK(log[i].k == ks[i]);
    CHECK(log[i].dMin == lows[i]);
  }
  CHECK(log[1].dMax == 2);
  CHECK(log[2].dMax == 4);
}

TEST_CASE("band variant with a high budget threshold equals plain widening") {
  Instance inst = five_job_instance();
  LnsConfig hd;
  hd.variant = LnsVariant::HdCdds;
  hd.kLimit = inst.n;
  LnsResult a = run_lns(inst, hd);
  LnsConfig cds;
  cds.variant = LnsVariant::Cds;
  LnsResult b = run_lns(inst, cds);
  CHECK(a.best.value == b.best.value);
  CHECK(a.sweeps == b.sweeps);
  CHECK(a.best.stats.nodes == b.best.stats.nodes);
}

TEST_CASE("mixed counting with a full binary prefix equals plain widening") {
  Instance inst = five_job_instance();
  LnsConfig mc;
  mc.variant = LnsVariant::McCds;
  mc.dBin = inst.n;
  LnsResult a = run_lns(inst, mc);
  LnsConfig cds;
  cds.variant = LnsVariant::Cds;
  LnsResult b = run_lns(inst, cds);
  CHECK(a.best.value == b.best.value);
  CHECK(a.sweeps == b.sweeps);
  CHECK(a.best.stats.nodes == b.best.stats.nodes);
  SUBCASE("a zero prefix still improves on the start") {
    mc.dBin = 0;
    LnsResult c = run_lns(inst, mc);
    CHECK(c.best.feasible);
    CHECK(c.best.value <= greedy_value(inst, Criterion::SumCompletion));
  }
}

TEST_CASE("a time limit cuts the run without losing feasibility") {
  GenParams gp;
  gp.n = 20;
  gp.m = 3;
  gp.seed = 77;
  Instance inst = generate_instance(gp);
  LnsConfig cfg;
  cfg.timeLimitSeconds = 0.05;
  LnsResult res = run_lns(inst, cfg);
  CHECK(res.best.feasible);
  CHECK(!res.best.stats.completed);
  CHECK(!res.exhausted);
  CHECK(res.best.value <= greedy_value(inst, Criterion::SumCompletion));
}

TEST_CASE("the default sweep strategy is the deep first order") {
  Instance inst = small_random(6, 6);
  LnsConfig dfs;  // default-constructed search strategy
  LnsResult a = run_lns(inst, dfs);
  LnsConfig low;
  low.search.strategy = Strategy::LDSlow;
  LnsResult b = run_lns(inst, low);
  CHECK(a.best.value == b.best.value);
  CHECK(a.sweeps == b.sweeps);
  CHECK(a.best.stats.nodes == b.best.stats.nodes);
}
