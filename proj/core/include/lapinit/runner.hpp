#pragma once

#include "lapinit/problem.hpp"

#include <iosfwd>

namespace lapinit {

/// Command entry points shared by the CLI. Return value is the process exit
/// code: 0 success, 1 input error, 2 failed internal consistency check.
int run_solve(const ProblemFile& problem, std::ostream& out, std::ostream& err);
int run_jumps(const ProblemFile& problem, std::ostream& out, std::ostream& err);
int run_compare(const ProblemFile& problem, std::ostream& out, std::ostream& err);
int run_sample(const ProblemFile& problem, std::ostream& out, std::ostream& err);
int run_verify(const ProblemFile& problem, std::ostream& out, std::ostream& err);

}  // namespace lapinit
