#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pmsched/model.hpp"

namespace pmsched {

// Bounded sampling on top of mt19937_64 with explicit arithmetic, so the same
// seed yields the same instance on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Uniform integer in [lo, hi] via 128-bit multiply-shift.
  long long uniform_int(long long lo, long long hi);
  // Uniform real in [a, b) from the top 53 bits.
  double uniform_real(double a, double b);

 private:
  std::mt19937_64 eng_;
};

struct GenParams {
  int n = 10;
  int m = 3;
  std::uint64_t seed = 1;
  double edgeDensity = 0.3;
  int setupLo = 1, setupHi = 10;
  int procLo = 1, procHi = 5;
  double tau = 0.3;   // due-date tightness
  double rho = 0.5;   // due-date spread
  double alphaLo = -0.5, alphaHi = 1.5;  // release slack factor range
};

// Random precedence DAG: a random permutation fixes a topological order, each
// forward pair joins with probability density, and the transitive reduction
// of the result is returned.
std::vector<std::pair<int, int>> gen_dag(int n, double density, Rng& rng);

// Setup matrix with entries uniform in [lo, hi], zero diagonal, then repaired
// to the weak triangle inequality s[i][j] <= s[i][k] + p[k] + s[k][j] by
// decreasing entries until a fixpoint.
std::vector<std::vector<Time>> gen_setups(int n, int lo, int hi, const std::vector<Time>& p,
                                          Rng& rng);

// Due dates spread around the horizon P = sum_i (p[i] + min_j s[i][j]) using
// tau and rho, releases pulled back from the due date by p[i] * (2 + alpha_i).
// Values are rounded half up and clamped to be non-negative.
void gen_windows(const std::vector<Time>& p, const std::vector<std::vector<Time>>& setup,
                 double tau, double rho, double alphaLo, double alphaHi, Rng& rng,
                 std::vector<Time>& r, std::vector<Time>& d);

// Full instance from one seed: processing times, precedence arcs, setups,
// then time windows, drawn in that order from a single stream.
Instance generate_instance(const GenParams& params);

}  // namespace pmsched
