#include "pmsched/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pmsched {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw std::runtime_error("instance parse error: " + what);
}

Time next_time(std::istream& in, const char* what) {
  Time v;
  if (!(in >> v)) parse_error(std::string("expected ") + what);
  return v;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

}  // namespace

Instance read_instance(std::istream& in) {
  Instance inst;
  inst.n = static_cast<int>(next_time(in, "job count"));
  inst.m = static_cast<int>(next_time(in, "machine count"));
  if (inst.n < 1 || inst.m < 1) parse_error("n and m must be positive");
  inst.p.resize(inst.n);
  inst.r.resize(inst.n);
  inst.d.resize(inst.n);
  for (auto& v : inst.p) v = next_time(in, "processing time");
  for (auto& v : inst.r) v = next_time(in, "release date");
  for (auto& v : inst.d) v = next_time(in, "due date");
  inst.setup.assign(inst.n, std::vector<Time>(inst.n));
  for (auto& row : inst.setup)
    for (auto& v : row) v = next_time(in, "setup time");
  int e = static_cast<int>(next_time(in, "edge count"));
  if (e < 0) parse_error("edge count must be non-negative");
  inst.edges.reserve(e);
  for (int k = 0; k < e; ++k) {
    int a = static_cast<int>(next_time(in, "edge tail"));
    int b = static_cast<int>(next_time(in, "edge head"));
    if (a < 1 || a > inst.n || b < 1 || b > inst.n) parse_error("edge endpoint out of range");
    inst.edges.emplace_back(a - 1, b - 1);
  }
  inst.prepare();
  return inst;
}

Instance read_instance_file(const std::string& path) {
  auto in = open_input(path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << inst.n << ' ' << inst.m << '\n';
  auto writeRow = [&out](const std::vector<Time>& row) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  };
  writeRow(inst.p);
  writeRow(inst.r);
  writeRow(inst.d);
  for (const auto& row : inst.setup) writeRow(row);
  out << inst.edges.size() << '\n';
  for (auto [a, b] : inst.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

void write_instance_file(const std::string& path, const Instance& inst) {
  auto out = open_output(path);
  write_instance(out, inst);
}

void write_solution(std::ostream& out, const Instance& inst, const Schedule& sched, Time value) {
  out << value << '\n';
  for (int i = 0; i < inst.n; ++i)
    out << i + 1 << ' ' << sched.machine[i] + 1 << ' ' << sched.start[i] << '\n';
}

void write_solution_file(const std::string& path, const Instance& inst, const Schedule& sched,
                         Time value) {
  auto out = open_output(path);
  write_solution(out, inst, sched, value);
}

SolutionFile read_solution(std::istream& in, const Instance& inst) {
  SolutionFile sol;
  if (!(in >> sol.value)) throw std::runtime_error("solution parse error: missing objective");
  sol.schedule.start.assign(inst.n, 0);
  sol.schedule.machine.assign(inst.n, -1);
  sol.schedule.sequence.assign(inst.m, {});
  for (int k = 0; k < inst.n; ++k) {
    int job, machine;
    Time start;
    if (!(in >> job >> machine >> start))
      throw std::runtime_error("solution parse error: truncated job line");
    if (job < 1 || job > inst.n || machine < 1 || machine > inst.m)
      throw std::runtime_error("solution parse error: index out of range");
    sol.schedule.start[job - 1] = start;
    sol.schedule.machine[job - 1] = machine - 1;
  }
  // Rebuild per-machine sequences from start times.
  for (int i = 0; i < inst.n; ++i) {
    if (sol.schedule.machine[i] < 0)
      throw std::runtime_error("solution parse error: job listed twice");
    sol.schedule.sequence[sol.schedule.machine[i]].push_back(i);
  }
  for (auto& seq : sol.schedule.sequence)
    std::sort(seq.begin(), seq.end(), [&sol](int a, int b) {
      if (sol.schedule.start[a] != sol.schedule.start[b])
        return sol.schedule.start[a] < sol.schedule.start[b];
      return a < b;
    });
  return sol;
}

SolutionFile read_solution_file(const std::string& path, const Instance& inst) {
  auto in = open_input(path);
  return read_solution(in, inst);
}

}  // namespace pmsched
