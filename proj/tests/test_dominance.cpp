#include <doctest.h>

#include "helpers.hpp"
#include "pmsched/dominance.hpp"

using namespace pmsched;
using pmsched::testing::five_job_instance;

namespace {

// Two opener jobs and two closers whose setups reward swapping the closers:
// after 0 the cheap follower is 3, after 1 it is 2.
Instance swap_instance() {
  Instance inst;
  inst.n = 4;
  inst.m = 2;
  inst.p = {2, 2, 2, 2};
  inst.r = {0, 0, 0, 0};
  inst.d = {0, 0, 0, 0};
  inst.setup = {{0, 2, 4, 1},
                {2, 0, 1, 4},
                {2, 2, 0, 2},
                {2, 2, 2, 0}};
  inst.prepare();
  return inst;
}

// A gap on machine 0: job 3 waits for its release at 20 while job 2, the
// last decision, lands one unit too late on machine 1. The gap would admit
// job 2 one unit earlier, after which job 1 inherits the front of machine 1.
// `friendly` controls whether job 1 is a safe host for job 4, the one job
// still waiting.
Instance gap_instance(bool friendly) {
  Instance inst;
  inst.n = 5;
  inst.m = 2;
  inst.p = {5, 3, 2, 2, 2};
  inst.r = {0, 0, 0, 20, 0};
  inst.d = {0, 0, 0, 0, 0};
  inst.setup = {{0, 2, 2, 2, 2},
                {2, 0, 7, 25, friendly ? 1 : 30},
                {2, 2, 0, 4, 1},
                {2, 2, 2, 0, 2},
                {2, 2, 2, 2, 0}};
  inst.prepare();
  return inst;
}

PartialSchedule gap_prefix(const Instance& inst) {
  PartialSchedule ps(inst);
  ps.extend(0, 0);  // 0..5
  ps.extend(1, 1);  // 0..3
  ps.extend(3, 0);  // 20..22, release bound
  ps.extend(2, 1);  // 10..12 behind s[1][2] = 7
  REQUIRE(ps.start_of(2) == 10);
  return ps;
}

}  // namespace

TEST_CASE("flow certificate must keep front jobs in front") {
  // Moving job 4 to 17 has a time-feasible witness, {0,1,3} next to {2,4},
  // but there job 3 follows front job 1. Continuations after such a reassignment
  // attach to a changed front, so the rule refuses it: front jobs give no
  // sequencing arcs, and with jobs 1, 3 and 4 all needing to close a machine
  // one unit has nowhere to go.
  Instance inst = five_job_instance();
  PartialSchedule ps(inst);
  ps.extend(0, 0);  // 1..5
  ps.extend(2, 1);  // 3..7
  ps.extend(1, 0);  // 7..10
  ps.extend(3, 1);  // 14..17
  ps.extend(4, 1);  // 18..20
  REQUIRE(ps.start_of(4) == 18);
  auto net = build_flow_network(ps);
  REQUIRE(net);
  CHECK(net->vertexCount == 14);  // source, sink, pool pair, start and completion per job
  CHECK(net->targetFlow == 7);    // two used machines plus five jobs
  CHECK(max_flow(*net) == 6);
  CHECK(!maxflow_rule(ps).prune);
}

TEST_CASE("flow rule stops short of the target when machines stay busy") {
  Instance inst = five_job_instance();
  PartialSchedule ps(inst);
  ps.extend(1, 0);  // 0..3
  ps.extend(2, 1);  // 3..7
  ps.extend(0, 0);  // 10..14, held up by s[1][0] = 7
  REQUIRE(ps.start_of(0) == 10);
  auto net = build_flow_network(ps);
  REQUIRE(net);
  CHECK(net->targetFlow == 5);
  CHECK(max_flow(*net) == 4);  // job 2 hands over in time, but it has to stay in front
  CHECK(!maxflow_rule(ps).prune);
}

TEST_CASE("the last job can slide into a gap on another machine") {
  // certified reassignment: 0, 2, 3 chain up on one machine with job 2 at 9,
  // job 1 closes the other; job 4 would start after job 1 at 4, well before
  // the 13 it gets after job 2 now
  Instance inst = gap_instance(true);
  PartialSchedule ps = gap_prefix(inst);
  auto net = build_flow_network(ps);
  REQUIRE(net);
  CHECK(net->targetFlow == 6);
  CHECK(max_flow(*net) == 6);
  CHECK(maxflow_rule(ps).prune);
}

TEST_CASE("no handover to a front that would delay a waiting job") {
  // same layout, but job 4 is expensive after job 1: leaving job 1 in front
  // would push job 4 from 13 to 33, so job 1 may not close its machine and
  // cannot feed anyone either
  Instance inst = gap_instance(false);
  PartialSchedule ps = gap_prefix(inst);
  auto net = build_flow_network(ps);
  REQUIRE(net);
  CHECK(net->targetFlow == 6);
  CHECK(max_flow(*net) == 5);
  CHECK(!maxflow_rule(ps).prune);
}

TEST_CASE("a donor machine can take the last job and keep both fronts") {
  // job 3 sits behind a 7 unit setup on machine 1; job 0 ends early enough
  // to host it one unit sooner on machine 0, and the front set {2, 3} stays
  Instance inst;
  inst.n = 4;
  inst.m = 2;
  inst.p = {1, 2, 1, 1};
  inst.r = {0, 0, 10, 0};
  inst.d = {0, 0, 0, 0};
  inst.setup = {{0, 5, 5, 2},
                {5, 0, 2, 7},
                {5, 5, 0, 5},
                {5, 5, 5, 0}};
  inst.prepare();
  PartialSchedule ps(inst);
  ps.extend(0, 0);  // 0..1
  ps.extend(1, 1);  // 0..2
  ps.extend(2, 0);  // 10..11, release bound
  ps.extend(3, 1);  // 9..10 behind s[1][3]
  REQUIRE(ps.start_of(3) == 9);
  auto net = build_flow_network(ps);
  REQUIRE(net);
  CHECK(net->targetFlow == 6);
  CHECK(max_flow(*net) == 6);
  CHECK(maxflow_rule(ps).prune);
}

TEST_CASE("flow rule skips moves that are infeasible outright") {
  Instance inst = five_job_instance();
  SUBCASE("nothing scheduled") {
    PartialSchedule ps(inst);
    CHECK(!build_flow_network(ps));
  }
  SUBCASE("last job starts at zero") {
    PartialSchedule ps(inst);
    ps.extend(1, 0);
    CHECK(!build_flow_network(ps));
  }
  SUBCASE("last job sits on its release date") {
    PartialSchedule ps(inst);
    ps.extend(0, 0);  // starts exactly at r = 1
    CHECK(!build_flow_network(ps));
  }
  SUBCASE("last job sits on a predecessor completion") {
    PartialSchedule ps(inst);
    ps.extend(0, 0);  // 1..5
    ps.extend(3, 1);  // starts at 5, the completion of its predecessor
    REQUIRE(ps.start_of(3) == 5);
    CHECK(!build_flow_network(ps));
  }
}

TEST_CASE("flow rule does not spread onto an idle machine") {
  // splitting the pair across machines would start job 0 nine units earlier,
  // but it would also take the idle machine away from the jobs still
  // waiting, so the pool is capped at the one machine the prefix uses
  Instance inst = five_job_instance();
  PartialSchedule ps(inst);
  ps.extend(1, 0);  // 0..3
  ps.extend(0, 0);  // 10..14 behind the setup
  REQUIRE(ps.start_of(0) == 10);
  auto net = build_flow_network(ps);
  REQUIRE(net);
  CHECK(net->targetFlow == 3);  // one used machine plus two jobs
  CHECK(max_flow(*net) == 2);
  CHECK(!maxflow_rule(ps).prune);
}

TEST_CASE("front permutation rule") {
  Instance inst = swap_instance();
  SUBCASE("prunes when swapping the closers helps both") {
    PartialSchedule ps(inst);
    ps.extend(0, 0);  // 0..2
    ps.extend(1, 1);  // 0..2
    ps.extend(2, 0);  // 6..8 behind s[0][2] = 4
    ps.extend(3, 1);  // 6..8 behind s[1][3] = 4
    DominanceVerdict v = front_permutation_rule(ps, Criterion::SumCompletion);
    REQUIRE(v.prune);
    std::vector<Decision> expect = {{0, 0}, {1, 1}, {3, 0}, {2, 1}};
    CHECK(v.witness == expect);
    // the witness replays to a strictly better prefix
    PartialSchedule better(inst);
    for (const Decision& dec : v.witness) better.extend(dec.job, dec.machine);
    CHECK(better.start_of(2) == 3);
    CHECK(better.start_of(3) == 3);
  }
  SUBCASE("the well ordered prefix is not pruned") {
    PartialSchedule ps(inst);
    ps.extend(0, 0);
    ps.extend(1, 1);
    ps.extend(3, 0);  // 3..5 after s[0][3] = 1
    ps.extend(2, 1);  // 3..5 after s[1][2] = 1
    CHECK(!front_permutation_rule(ps, Criterion::SumCompletion).prune);
  }
  SUBCASE("fewer than two front jobs never fires") {
    PartialSchedule ps(inst);
    ps.extend(0, 0);
    ps.extend(2, 0);
    CHECK(!front_permutation_rule(ps, Criterion::SumCompletion).prune);
  }
}

TEST_CASE("front permutation never delays a job it keeps") {
  // a swap that helps one closer but delays the other must not fire
  Instance inst = five_job_instance();
  PartialSchedule ps(inst);
  ps.extend(1, 0);  // 0..3
  ps.extend(2, 1);  // 3..7
  DominanceVerdict v = front_permutation_rule(ps, Criterion::SumCompletion);
  CHECK(!v.prune);
}

TEST_CASE("budget aware dominance keeps the witness reachable") {
  Instance inst = swap_instance();
  PartialSchedule ps(inst);
  ps.extend(0, 0);
  ps.extend(1, 1);
  ps.extend(2, 0);
  ps.extend(3, 1);
  std::vector<Decision> ref = ps.order();
  DominanceVerdict plain = front_permutation_rule(ps, Criterion::SumCompletion);
  REQUIRE(plain.prune);
  CountingPolicy binary;
  SUBCASE("wide budget keeps the prune") {
    DominanceVerdict v = discrepancy_adapted(inst, plain, &ref, 1, Criterion::SumCompletion,
                                             binary);
    CHECK(v.prune);
  }
  SUBCASE("zero budget cancels it") {
    DominanceVerdict v = discrepancy_adapted(inst, plain, &ref, 0, Criterion::SumCompletion,
                                             binary);
    CHECK(!v.prune);
  }
  SUBCASE("a verdict without prune passes through") {
    DominanceVerdict none;
    CHECK(!discrepancy_adapted(inst, none, &ref, 0, Criterion::SumCompletion, binary).prune);
  }
}

TEST_CASE("deviation cost of the witness against the reference") {
  Instance inst = swap_instance();
  PartialSchedule ps(inst);
  ps.extend(0, 0);
  ps.extend(1, 1);
  ps.extend(2, 0);
  ps.extend(3, 1);
  std::vector<Decision> ref = ps.order();
  std::vector<Decision> witness = {{0, 0}, {1, 1}, {3, 0}, {2, 1}};
  CountingPolicy binary;
  CHECK(count_job_discrepancies(inst, ref, &ref, Criterion::SumCompletion, binary) == 0);
  CHECK(count_job_discrepancies(inst, witness, &ref, Criterion::SumCompletion, binary) == 1);
  CountingPolicy nonBinary{JobCounting::NonBinary, 0};
  CHECK(count_job_discrepancies(inst, witness, &ref, Criterion::SumCompletion, nonBinary) == 1);
}
