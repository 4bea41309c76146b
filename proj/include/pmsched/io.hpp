#pragma once

#include <iosfwd>
#include <string>

#include "pmsched/model.hpp"

namespace pmsched {

// Instance text format, whitespace separated, jobs and machines 1-based:
//   n m
//   p_1 .. p_n
//   r_1 .. r_n
//   d_1 .. d_n
//   n rows of the setup matrix
//   e
//   e lines "i j" meaning i precedes j
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

// Solution text format: first line the objective value, then one line per
// job "job machine start", 1-based, in job order.
void write_solution(std::ostream& out, const Instance& inst, const Schedule& sched, Time value);
void write_solution_file(const std::string& path, const Instance& inst, const Schedule& sched,
                         Time value);
struct SolutionFile {
  Time value = 0;
  Schedule schedule;
};
SolutionFile read_solution(std::istream& in, const Instance& inst);
SolutionFile read_solution_file(const std::string& path, const Instance& inst);

}  // namespace pmsched
