#include "pmsched/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pmsched/bounds.hpp"

namespace pmsched {

const std::vector<std::string> kBenchMethods = {
    "exact", "ect", "dbdfs", "lds-top", "lds-low", "cds", "cdds", "hdcdds", "mccds"};

bool bench_method_known(const std::string& name) {
  for (const auto& m : kBenchMethods)
    if (m == name) return true;
  return false;
}

namespace {

BenchCell run_method(const Instance& inst, const std::string& method,
                     const BenchOptions& options) {
  BenchCell cell;
  SearchConfig cfg = options.search;
  cfg.timeLimitSeconds = options.timeLimitSeconds;

  auto fromSolution = [&cell](const Solution& sol) {
    cell.feasible = sol.feasible;
    cell.value = sol.value;
    cell.stats = sol.stats;
  };

  if (method == "exact") {
    fromSolution(solve_exact(inst, cfg));
  } else if (method == "ect") {
    PartialSchedule greedy = complete_greedy(PartialSchedule(inst), cfg.criterion);
    cell.feasible = true;
    cell.value = cfg.criterion == Criterion::SumCompletion ? greedy.scheduled_sum_completion()
                                                           : greedy.scheduled_max_lateness();
    cell.stats.leaves = 1;
  } else if (method == "dbdfs" || method == "lds-top" || method == "lds-low") {
    cfg.strategy = method == "dbdfs" ? Strategy::DBDFS
                 : method == "lds-top" ? Strategy::LDStop
                                       : Strategy::LDSlow;
    cfg.maxDiscrepancies = options.maxDiscrepancies;
    cfg.counting.mode = JobCounting::Binary;
    fromSolution(solve_lds(inst, cfg));
  } else if (method == "cds" || method == "cdds" || method == "hdcdds" || method == "mccds") {
    LnsConfig lns;
    lns.search = cfg;
    lns.variant = method == "cds" ? LnsVariant::Cds
                : method == "cdds" ? LnsVariant::Cdds
                : method == "hdcdds" ? LnsVariant::HdCdds
                                     : LnsVariant::McCds;
    lns.timeLimitSeconds = options.timeLimitSeconds;
    fromSolution(run_lns(inst, lns).best);
  } else {
    throw std::invalid_argument("unknown bench method: " + method);
  }
  return cell;
}

std::string fmt1(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

std::string fmt3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

BenchReport run_bench(const std::vector<Instance>& instances,
                      const std::vector<std::string>& names,
                      const std::vector<std::string>& methods, const BenchOptions& options) {
  if (instances.size() != names.size())
    throw std::invalid_argument("run_bench: one name per instance required");
  for (const auto& m : methods)
    if (!bench_method_known(m)) throw std::invalid_argument("unknown bench method: " + m);

  BenchReport report;
  report.methods = methods;
  report.instances = names;
  report.cells.assign(instances.size(), std::vector<BenchCell>(methods.size()));

  const size_t total = instances.size() * methods.size();
  const int workers = std::max(1, std::min<int>(options.jobs, static_cast<int>(total)));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
      size_t i = idx / methods.size();
      size_t j = idx % methods.size();
      report.cells[i][j] = run_method(instances[i], methods[j], options);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  report.bestKnown.assign(instances.size(), kTimeInfinity);
  for (size_t i = 0; i < instances.size(); ++i)
    for (size_t j = 0; j < methods.size(); ++j)
      if (report.cells[i][j].feasible)
        report.bestKnown[i] = std::min(report.bestKnown[i], report.cells[i][j].value);
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "instance,method,value,best,nodes,leaves,timeToBest,totalTime,"
         "prunedBound,prunedEnergy,prunedFront,prunedFlow,dominanceCancelled\n";
  for (size_t i = 0; i < report.instances.size(); ++i) {
    for (size_t j = 0; j < report.methods.size(); ++j) {
      const BenchCell& c = report.cells[i][j];
      out << report.instances[i] << ',' << report.methods[j] << ','
          << (c.feasible ? std::to_string(c.value) : "inf") << ',' << report.bestKnown[i] << ','
          << c.stats.nodes << ',' << c.stats.leaves << ',' << fmt3(c.stats.timeToBest) << ','
          << fmt3(c.stats.totalTime) << ',' << c.stats.prunedBound << ',' << c.stats.prunedEnergy
          << ',' << c.stats.prunedFront << ',' << c.stats.prunedFlow << ','
          << c.stats.dominanceCancelled << '\n';
    }
  }
  return out.str();
}

std::string bench_table(const BenchReport& report) {
  const size_t ni = report.instances.size();
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-8s %6s %6s %8s %12s %9s %10s %9s %9s %9s\n", "method",
                "NbBest", "%Best", "AvgDev%", "AvgNodes", "AvgTBest", "AvgBound", "AvgEnerg",
                "AvgFront", "AvgFlow");
  out << line;
  for (size_t j = 0; j < report.methods.size(); ++j) {
    long long nbBest = 0;
    double devSum = 0, nodeSum = 0, tBestSum = 0;
    double bSum = 0, eSum = 0, fSum = 0, wSum = 0;
    for (size_t i = 0; i < ni; ++i) {
      const BenchCell& c = report.cells[i][j];
      Time best = report.bestKnown[i];
      if (c.feasible && best < kTimeInfinity) {
        if (c.value == best) ++nbBest;
        devSum += 100.0 * static_cast<double>(c.value - best) /
                  static_cast<double>(std::max<Time>(1, best < 0 ? -best : best));
      }
      nodeSum += static_cast<double>(c.stats.nodes);
      tBestSum += c.stats.timeToBest;
      bSum += static_cast<double>(c.stats.prunedBound);
      eSum += static_cast<double>(c.stats.prunedEnergy);
      fSum += static_cast<double>(c.stats.prunedFront);
      wSum += static_cast<double>(c.stats.prunedFlow);
    }
    double denom = ni > 0 ? static_cast<double>(ni) : 1.0;
    std::snprintf(line, sizeof(line), "%-8s %6lld %6s %8s %12s %9s %10s %9s %9s %9s\n",
                  report.methods[j].c_str(), nbBest, fmt1(100.0 * nbBest / denom).c_str(),
                  fmt1(devSum / denom).c_str(), fmt1(nodeSum / denom).c_str(),
                  fmt3(tBestSum / denom).c_str(), fmt1(bSum / denom).c_str(),
                  fmt1(eSum / denom).c_str(), fmt1(fSum / denom).c_str(),
                  fmt1(wSum / denom).c_str());
    out << line;
  }
  return out.str();
}

}  // namespace pmsched
