#pragma once

#include "lapinit/decompose.hpp"

namespace lapinit {

/// Per derivative order: the value just before the event, the jump across it,
/// and the resulting value just after. post == pre + jump exactly.
struct JumpReport {
    struct Row {
        int order = 0;
        Rational pre;
        Rational jump;
        Rational post;
    };
    std::vector<Row> rows;  // orders 0 .. n-1
};

/// Jump of y^(k) equals the integral of the impulsive part of y^(k+1): only
/// the delta^(0) coefficient survives integration, and it is exactly the jump
/// of the smooth part of y^(k).
JumpReport compute_jumps(const SingularSolution& ss, const SysSpec& sys);

/// The post column: [y(0+), y'(0+), ..., y^(n-1)(0+)].
std::vector<Rational> post_initial_conditions(const JumpReport& report);

}  // namespace lapinit
