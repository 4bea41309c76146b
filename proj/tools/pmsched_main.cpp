#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmsched/bench.hpp"
#include "pmsched/bounds.hpp"
#include "pmsched/instgen.hpp"
#include "pmsched/io.hpp"
#include "pmsched/lns.hpp"
#include "pmsched/oracle.hpp"
#include "pmsched/search.hpp"

using namespace pmsched;

namespace {

Criterion parse_criterion(const std::string& s) {
  if (s == "sumc") return Criterion::SumCompletion;
  if (s == "lmax") return Criterion::MaxLateness;
  throw CLI::ValidationError("--criterion", "expected sumc or lmax");
}

int cmd_gen(const GenParams& params, const std::string& outPath) {
  Instance inst = generate_instance(params);
  if (outPath.empty())
    write_instance(std::cout, inst);
  else
    write_instance_file(outPath, inst);
  return 0;
}

struct SolveArgs {
  std::string instPath;
  std::string outPath;
  std::string criterion = "sumc";
  std::string method = "exact";
  long long budget = 3;
  double timeLimit = 0;
  bool noLbCp = false, noSrpt = false, noEnergetic = false;
  bool front = false, flow = false, adapted = false;
  long long kMax = -1, kLimit = -1;
  int x = -1, depthLimit = -1, dBin = -1;
};

int cmd_solve(const SolveArgs& a) {
  Instance inst = read_instance_file(a.instPath);
  Criterion crit = parse_criterion(a.criterion);

  SearchConfig cfg;
  cfg.criterion = crit;
  cfg.useLbCp = !a.noLbCp;
  cfg.useLbSrpt = !a.noSrpt;
  cfg.useEnergetic = !a.noEnergetic;
  cfg.useFrontRule = a.front;
  cfg.useMaxflowRule = a.flow;
  cfg.useAdaptedRules = a.adapted;
  cfg.timeLimitSeconds = a.timeLimit;

  Solution sol;
  if (a.method == "exact") {
    sol = solve_exact(inst, cfg);
  } else if (a.method == "ect") {
    PartialSchedule greedy = complete_greedy(PartialSchedule(inst), crit);
    sol.feasible = true;
    sol.value = crit == Criterion::SumCompletion ? greedy.scheduled_sum_completion()
                                                 : greedy.scheduled_max_lateness();
    sol.schedule = to_schedule(greedy);
    sol.decisions = greedy.order();
  } else if (a.method == "dbdfs" || a.method == "lds-top" || a.method == "lds-low") {
    cfg.strategy = a.method == "dbdfs" ? Strategy::DBDFS
                 : a.method == "lds-top" ? Strategy::LDStop
                                         : Strategy::LDSlow;
    cfg.maxDiscrepancies = a.budget;
    sol = solve_lds(inst, cfg);
  } else if (a.method == "cds" || a.method == "cdds" || a.method == "hdcdds" ||
             a.method == "mccds") {
    LnsConfig lns;
    lns.search = cfg;
    lns.variant = a.method == "cds" ? LnsVariant::Cds
                : a.method == "cdds" ? LnsVariant::Cdds
                : a.method == "hdcdds" ? LnsVariant::HdCdds
                                       : LnsVariant::McCds;
    lns.kMax = a.kMax;
    lns.kLimit = a.kLimit;
    lns.x = a.x;
    lns.depthLimit = a.depthLimit;
    lns.dBin = a.dBin;
    lns.timeLimitSeconds = a.timeLimit;
    LnsResult res = run_lns(inst, lns);
    sol = res.best;
    std::cout << "sweeps " << res.sweeps << "\n";
    long long n = inst.n;
    std::cout << "k-max " << (lns.kMax > 0 ? lns.kMax : n) << "\n";
    if (a.method == "hdcdds") {
      std::cout << "k-limit " << (lns.kLimit > 0 ? lns.kLimit : 3) << "\n";
      std::cout << "band-width " << (lns.x > 0 ? lns.x : static_cast<int>((n + 4) / 5)) << "\n";
    }
    if (a.method == "cdds")
      std::cout << "depth-limit "
                << (lns.depthLimit >= 0 ? lns.depthLimit : static_cast<int>((n + 2) / 3)) << "\n";
    if (a.method == "mccds")
      std::cout << "binary-top-depth "
                << (lns.dBin >= 0 ? lns.dBin : static_cast<int>((n + 3) / 4)) << "\n";
  } else {
    std::cerr << "unknown method: " << a.method << "\n";
    return 2;
  }

  if (!sol.feasible) {
    std::cerr << "no feasible solution found\n";
    return 1;
  }
  std::cout << "value " << sol.value << "\n";
  std::cout << "nodes " << sol.stats.nodes << "\n";
  std::cout << "leaves " << sol.stats.leaves << "\n";
  std::cout << "time-to-best " << sol.stats.timeToBest << "\n";
  std::cout << "total-time " << sol.stats.totalTime << "\n";
  if (!sol.stats.completed) std::cout << "time-limit-hit 1\n";
  if (!a.outPath.empty()) write_solution_file(a.outPath, inst, sol.schedule, sol.value);
  return 0;
}

int cmd_check(const std::vector<std::string>& paths) {
  int bad = 0;
  for (const auto& path : paths) {
    Instance inst = read_instance_file(path);
    if (inst.n > 9) {
      std::cout << path << ": skipped, " << inst.n << " jobs is beyond the oracle\n";
      continue;
    }
    for (Criterion crit : {Criterion::SumCompletion, Criterion::MaxLateness}) {
      const char* tag = crit == Criterion::SumCompletion ? "sumc" : "lmax";
      OracleResult ref = brute_force(inst, crit);
      SearchConfig cfg;
      cfg.criterion = crit;
      Solution sol = solve_exact(inst, cfg);
      if (!sol.feasible || sol.value != ref.value) {
        std::cout << path << " " << tag << ": MISMATCH solver "
                  << (sol.feasible ? std::to_string(sol.value) : "none") << " oracle "
                  << ref.value << "\n";
        ++bad;
      } else {
        std::cout << path << " " << tag << ": ok value " << sol.value << " ("
                  << ref.enumerated << " leaves enumerated)\n";
      }
    }
  }
  return bad == 0 ? 0 : 1;
}

struct BenchArgs {
  std::string dir;
  std::vector<std::string> methods;
  std::string criterion = "sumc";
  long long budget = 3;
  double timeLimit = 0;
  int jobs = 1;
  std::string csvPath;
};

int cmd_bench(const BenchArgs& a) {
  std::string dir = a.dir;
  if (dir.empty()) {
    const char* env = std::getenv("PMSCHED_CORPUS_DIR");
    if (env) dir = env;
  }
  if (dir.empty()) {
    std::cerr << "no corpus directory: pass --dir or set PMSCHED_CORPUS_DIR\n";
    return 2;
  }
  std::vector<std::string> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".inst")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) {
    std::cerr << "no .inst files under " << dir << "\n";
    return 2;
  }

  std::vector<Instance> instances;
  std::vector<std::string> names;
  for (const auto& p : paths) {
    instances.push_back(read_instance_file(p));
    names.push_back(std::filesystem::path(p).stem().string());
  }

  BenchOptions opt;
  opt.search.criterion = parse_criterion(a.criterion);
  opt.maxDiscrepancies = a.budget;
  opt.timeLimitSeconds = a.timeLimit;
  opt.jobs = a.jobs;
  std::vector<std::string> methods = a.methods.empty() ? kBenchMethods : a.methods;

  BenchReport report = run_bench(instances, names, methods, opt);
  std::cout << bench_table(report);
  if (!a.csvPath.empty()) {
    std::ofstream out(a.csvPath);
    out << bench_csv(report);
    std::cout << "csv written to " << a.csvPath << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parallel machine scheduling with setup times and precedence constraints"};
  app.require_subcommand(1);

  GenParams gp;
  std::string genOut;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("-n,--jobs", gp.n, "number of jobs")->check(CLI::PositiveNumber);
  gen->add_option("-m,--machines", gp.m, "number of machines")->check(CLI::PositiveNumber);
  gen->add_option("-s,--seed", gp.seed, "random seed");
  gen->add_option("--density", gp.edgeDensity, "precedence density in [0,1]");
  gen->add_option("--setup-lo", gp.setupLo, "setup lower bound");
  gen->add_option("--setup-hi", gp.setupHi, "setup upper bound");
  gen->add_option("--proc-lo", gp.procLo, "processing time lower bound");
  gen->add_option("--proc-hi", gp.procHi, "processing time upper bound");
  gen->add_option("--tau", gp.tau, "due-date tightness");
  gen->add_option("--rho", gp.rho, "due-date spread");
  gen->add_option("--alpha-lo", gp.alphaLo, "release slack factor lower bound");
  gen->add_option("--alpha-hi", gp.alphaHi, "release slack factor upper bound");
  gen->add_option("-o,--output", genOut, "output file (default stdout)");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("-i,--instance", sa.instPath, "instance file")->required();
  solve->add_option("-c,--criterion", sa.criterion, "sumc or lmax");
  solve->add_option("--method", sa.method,
                    "exact, ect, dbdfs, lds-top, lds-low, cds, cdds, hdcdds, mccds");
  solve->add_option("-k,--budget", sa.budget, "discrepancy budget for dbdfs and lds methods");
  solve->add_option("-t,--time-limit", sa.timeLimit, "time limit in seconds");
  solve->add_flag("--no-lbcp", sa.noLbCp, "disable the path lower bound");
  solve->add_flag("--no-srpt", sa.noSrpt, "disable the preemptive relaxation bound");
  solve->add_flag("--no-energetic", sa.noEnergetic, "disable energetic pruning");
  solve->add_flag("--front", sa.front, "enable the front permutation rule");
  solve->add_flag("--flow", sa.flow, "enable the flow feasibility rule");
  solve->add_flag("--adapted", sa.adapted, "budget-aware dominance (with --front)");
  solve->add_option("--kmax", sa.kMax, "largest budget tried by the lns variants");
  solve->add_option("--klimit", sa.kLimit, "hdcdds: budget where sliding bands start");
  solve->add_option("-x,--band-width", sa.x, "hdcdds: sliding band width");
  solve->add_option("--depth-limit", sa.depthLimit, "cdds: deviations only above this depth");
  solve->add_option("--dbin", sa.dBin, "mccds: depth where counting switches to rank");
  solve->add_option("-o,--output", sa.outPath, "write the solution here");

  std::vector<std::string> checkPaths;
  auto* check = app.add_subcommand("check", "compare the solver against the oracle");
  check->add_option("files", checkPaths, "instance files (at most 9 jobs each)")->required();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "run the method comparison over a corpus");
  bench->add_option("-d,--dir", ba.dir, "directory of .inst files (default PMSCHED_CORPUS_DIR)");
  bench->add_option("--methods", ba.methods, "methods to run (default all)");
  bench->add_option("-c,--criterion", ba.criterion, "sumc or lmax");
  bench->add_option("-k,--budget", ba.budget, "discrepancy budget for dbdfs and lds methods");
  bench->add_option("-t,--time-limit", ba.timeLimit, "time limit per run in seconds");
  bench->add_option("-j,--jobs", ba.jobs, "worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--csv", ba.csvPath, "also write per-run rows to this csv file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(gp, genOut);
    if (solve->parsed()) return cmd_solve(sa);
    if (check->parsed()) return cmd_check(checkPaths);
    if (bench->parsed()) return cmd_bench(ba);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
