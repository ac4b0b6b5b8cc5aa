#pragma once

#include "lapinit/solve.hpp"

#include <iosfwd>
#include <string>

namespace lapinit {

struct RunOptions {
    Method method = Method::modified_lplus;
    double t_end = 0.0;  // 0 means "choose from the solution's slowest rate"
    double dt = 0.0;     // 0 means t_end / 400
    std::vector<double> epsilons;
    std::string out_path;
    bool json = false;
    bool allow_order_two = false;
};

struct ProblemFile {
    SysSpec sys;
    RunOptions options;
};

/// Parses and validates a problem description. Numbers may be integers,
/// decimals (taken at their printed value) or "p/q" strings; all become exact
/// rationals. Violations throw std::invalid_argument naming the field.
ProblemFile parse_problem(const std::string& path);
ProblemFile parse_problem_text(const std::string& text);

/// Lossless re-serialization: parsing the output reproduces the same system.
std::string serialize_problem(const ProblemFile& problem);

Method parse_method(const std::string& name);

}  // namespace lapinit
