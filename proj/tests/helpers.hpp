#pragma once

#include <vector>

#include "pmsched/instgen.hpp"
#include "pmsched/model.hpp"

namespace pmsched::testing {

// 5 jobs, 2 machines, setups and two precedence arcs (1 before 4, 2 before 5
// in 1-based speak). Small enough to trace by hand, rich enough to exercise
// releases, setups and precedence in one go.
inline Instance five_job_instance() {
  Instance inst;
  inst.n = 5;
  inst.m = 2;
  inst.p = {4, 3, 4, 3, 2};
  inst.r = {1, 0, 3, 3, 1};
  inst.d = {7, 5, 8, 10, 5};
  inst.setup = {{0, 2, 3, 4, 5},
                {7, 0, 6, 1, 3},
                {2, 4, 0, 7, 1},
                {4, 4, 8, 0, 1},
                {3, 4, 8, 5, 0}};
  inst.edges = {{0, 3}, {1, 4}};
  inst.prepare();
  return inst;
}

// 4 unit jobs, 2 machines, setups chosen so that list scheduling with the
// earliest-completion rule cannot reach the optimum once 3 must precede 4.
inline Instance four_job_instance(bool withPrecedence) {
  Instance inst;
  inst.n = 4;
  inst.m = 2;
  inst.p = {1, 1, 1, 1};
  inst.r = {0, 0, 2, 2};
  inst.d = {0, 0, 0, 0};
  inst.setup = {{0, 10, 2, 10},
                {10, 0, 1, 1},
                {10, 10, 0, 10},
                {10, 10, 10, 0}};
  if (withPrecedence) inst.edges = {{2, 3}};
  inst.prepare();
  return inst;
}

// Deterministic small instances for property tests. Index steers the shape
// so the batch covers both machine counts and a spread of setup scales.
inline Instance small_random(int index, int n) {
  GenParams gp;
  gp.n = n;
  gp.m = 2 + index % 2;
  gp.seed = 1000 + static_cast<std::uint64_t>(index);
  gp.edgeDensity = index % 3 == 0 ? 0.15 : 0.3;
  if (index % 2 == 1) {
    gp.setupLo = 1;
    gp.setupHi = 5;
    gp.procLo = 1;
    gp.procHi = 10;
  }
  return generate_instance(gp);
}

}  // namespace pmsched::testing
