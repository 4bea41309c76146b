#include "pmsched/instgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pmsched {

long long Rng::uniform_int(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  unsigned __int128 span = static_cast<unsigned __int128>(hi - lo) + 1;
  unsigned __int128 scaled = static_cast<unsigned __int128>(eng_()) * span;
  return lo + static_cast<long long>(scaled >> 64);
}

double Rng::uniform_real(double a, double b) {
  double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  return a + (b - a) * u;
}

std::vector<std::pair<int, int>> gen_dag(int n, double density, Rng& rng) {
  if (density < 0.0 || density > 1.0) throw std::invalid_argument("gen_dag: density outside [0,1]");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.uniform_int(0, i));
    std::swap(order[i], order[j]);
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.uniform_real(0.0, 1.0) < density) adj[order[a]][order[b]] = 1;
  // Transitive reduction: drop (u, v) whenever a two-step-or-longer path
  // u -> k ->* v survives. Closure first, then the sweep.
  std::vector<std::vector<char>> reach = adj;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!adj[u][v]) continue;
      bool redundant = false;
      for (int k = 0; k < n && !redundant; ++k)
        if (k != u && k != v && adj[u][k] && reach[k][v]) redundant = true;
      if (!redundant) edges.emplace_back(u, v);
    }
  return edges;
}

std::vector<std::vector<Time>> gen_setups(int n, int lo, int hi, const std::vector<Time>& p,
                                          Rng& rng) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("gen_setups: bad range");
  std::vector<std::vector<Time>> s(n, std::vector<Time>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s[i][j] = rng.uniform_int(lo, hi);
  // Entries only decrease, so the sweep reaches a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        for (int j = 0; j < n; ++j) {
          if (j == i || j == k) continue;
          Time viaK = s[i][k] + p[k] + s[k][j];
          if (viaK < s[i][j]) {
            s[i][j] = viaK;
            changed = true;
          }
        }
      }
  }
  return s;
}

void gen_windows(const std::vector<Time>& p, const std::vector<std::vector<Time>>& setup,
                 double tau, double rho, double alphaLo, double alphaHi, Rng& rng,
                 std::vector<Time>& r, std::vector<Time>& d) {
  const int n = static_cast<int>(p.size());
  Time horizon = 0;
  for (int i = 0; i < n; ++i) {
    Time minOut = kTimeInfinity;
    for (int j = 0; j < n; ++j)
      if (j != i) minOut = std::min(minOut, setup[i][j]);
    horizon += p[i] + (minOut == kTimeInfinity ? 0 : minOut);
  }
  auto roundHalfUp = [](double x) { return static_cast<Time>(std::floor(x + 0.5)); };
  double lo = std::max(0.0, static_cast<double>(horizon) * (1.0 - tau - rho / 2.0));
  double hi = static_cast<double>(horizon) * (1.0 - tau + rho / 2.0);
  r.assign(n, 0);
  d.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    d[i] = std::max<Time>(0, roundHalfUp(lo >= hi ? lo : rng.uniform_real(lo, hi)));
    double alpha = rng.uniform_real(alphaLo, alphaHi);
    r[i] = std::max<Time>(0, roundHalfUp(static_cast<double>(d[i]) -
                                         static_cast<double>(p[i]) * (2.0 + alpha)));
  }
}

Instance generate_instance(const GenParams& params) {
  if (params.n < 1 || params.m < 1) throw std::invalid_argument("generate_instance: bad size");
  Rng rng(params.seed);
  Instance inst;
  inst.n = params.n;
  inst.m = params.m;
  inst.p.resize(params.n);
  for (auto& v : inst.p) v = rng.uniform_int(params.procLo, params.procHi);
  inst.edges = gen_dag(params.n, params.edgeDensity, rng);
  inst.setup = gen_setups(params.n, params.setupLo, params.setupHi, inst.p, rng);
  gen_windows(inst.p, inst.setup, params.tau, params.rho, params.alphaLo, params.alphaHi, rng,
              inst.r, inst.d);
  inst.prepare();
  return inst;
}

}  // namespace pmsched
