#include <doctest.h>

#include <queue>

#include "helpers.hpp"
#include "pmsched/instgen.hpp"

using namespace pmsched;

namespace {

bool reachable_without_edge(const Instance& inst, int from, int to) {
  std::vector<char> seen(inst.n, 0);
  std::queue<int> bfs;
  bfs.push(from);
  seen[from] = 1;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int v : inst.succs[u]) {
      if (u == from && v == to) continue;  // skip the direct arc itself
      if (seen[v]) continue;
      if (v == to) return true;
      seen[v] = 1;
      bfs.push(v);
    }
  }
  return false;
}

}  // namespace

TEST_CASE("bounded sampling stays in range") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    long long v = rng.uniform_int(-3, 12);
    CHECK(v >= -3);
    CHECK(v <= 12);
    double x = rng.uniform_real(0.25, 0.75);
    CHECK(x >= 0.25);
    CHECK(x < 0.75);
  }
  CHECK(rng.uniform_int(5, 5) == 5);
}

TEST_CASE("generated instances validate across seeds and shapes") {
  for (int idx = 0; idx < 40; ++idx) {
    GenParams gp;
    gp.n = 4 + idx % 9;
    gp.m = 2 + idx % 3;
    gp.seed = 500 + static_cast<std::uint64_t>(idx);
    gp.edgeDensity = (idx % 4) * 0.2;
    Instance inst = generate_instance(gp);
    auto err = validate_instance(inst);
    INFO("seed ", gp.seed, ": ", err ? *err : "");
    CHECK(!err);
  }
}

TEST_CASE("generation is reproducible and seed sensitive") {
  GenParams gp;
  gp.n = 10;
  gp.m = 3;
  gp.seed = 99;
  Instance a = generate_instance(gp);
  Instance b = generate_instance(gp);
  CHECK(a.p == b.p);
  CHECK(a.r == b.r);
  CHECK(a.d == b.d);
  CHECK(a.setup == b.setup);
  CHECK(a.edges == b.edges);
  gp.seed = 100;
  Instance c = generate_instance(gp);
  bool differs = a.p != c.p || a.r != c.r || a.d != c.d || a.setup != c.setup || a.edges != c.edges;
  CHECK(differs);
}

TEST_CASE("precedence graphs come transitively reduced") {
  for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
    GenParams gp;
    gp.n = 10;
    gp.m = 2;
    gp.seed = seed;
    gp.edgeDensity = 0.5;
    Instance inst = generate_instance(gp);
    REQUIRE(inst.acyclic());
    for (auto [u, v] : inst.edges) {
      INFO("arc ", u, " -> ", v, " is implied by a longer path");
      CHECK(!reachable_without_edge(inst, u, v));
    }
  }
}

TEST_CASE("density knob spans empty to chain-like graphs") {
  GenParams gp;
  gp.n = 12;
  gp.m = 2;
  gp.seed = 5;
  gp.edgeDensity = 0;
  CHECK(generate_instance(gp).edges.empty());
  gp.edgeDensity = 1;
  Instance full = generate_instance(gp);
  // the reduction of the complete order is a chain
  CHECK(static_cast<int>(full.edges.size()) == gp.n - 1);
}

TEST_CASE("setup repair keeps values in range") {
  Rng rng(21);
  std::vector<Time> p = {3, 1, 4, 2, 5, 2};
  auto s = gen_setups(6, 2, 9, p, rng);
  for (int i = 0; i < 6; ++i) {
    CHECK(s[i][i] == 0);
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      CHECK(s[i][j] >= 0);
      CHECK(s[i][j] <= 9);
      for (int k = 0; k < 6; ++k)
        if (k != i && k != j) CHECK(s[i][j] <= s[i][k] + p[k] + s[k][j]);
    }
  }
}

TEST_CASE("windows scale with the horizon") {
  for (std::uint64_t seed : {31u, 32u, 33u}) {
    GenParams gp;
    gp.n = 10;
    gp.m = 2;
    gp.seed = seed;
    Instance inst = generate_instance(gp);
    Time horizon = 0;
    for (int i = 0; i < inst.n; ++i) horizon += inst.p[i] + inst.min_outgoing_setup(i);
    double hi = static_cast<double>(horizon) * (1.0 - gp.tau + gp.rho / 2.0);
    for (int i = 0; i < inst.n; ++i) {
      CHECK(inst.d[i] >= 0);
      CHECK(static_cast<double>(inst.d[i]) <= hi + 1.0);
      CHECK(inst.r[i] >= 0);
      CHECK(inst.r[i] <= std::max<Time>(0, inst.d[i]));
    }
  }
}
