#pragma once

#include "lapinit/jumps.hpp"
#include "lapinit/partial_fractions.hpp"

namespace lapinit {

enum class Method { modified_lplus, lminus, naive_lplus };

const char* method_name(Method m);

/// Closed-form solution of one problem: smooth part, impulsive part, the
/// transform the smooth part came from, and the jump analysis that seeded it.
struct Solution {
    RegSig regular;
    SingDist singular;
    RationalFn transform;  // transform of the smooth part only
    JumpReport report;
    Method method = Method::modified_lplus;
    bool exact = true;  // closed-form atom data is exact rational
};

/// Pairs the smooth and impulsive parts of one problem into a Solution shell;
/// evaluation uses the smooth part only, impulsive content is carried
/// alongside (an impulse train has no pointwise values).
Solution combine_solution(RegSig regular, SingDist singular);

/// Initial-value theorem check: lim s*Y(s) as the ratio of num's coefficient
/// of s^(deg den - 1) to den's leading coefficient. Requires deg num <= deg
/// den; pass iff |value - expected| <= 1e-9 * (1 + |expected|).
std::pair<double, bool> ivt_check(const RationalFn& Y, const Rational& expected_post);

/// Solves the smooth subproblem by the 0+ transform seeded with the given
/// post-initial values, inverts through partial fractions, and cross-checks
/// the closed form against its own transform.
Solution lplus_solve_regular(const SysSpec& sys, const std::vector<Rational>& post);

/// Full three-stage pipeline: decompose, back-substitute the impulsive part,
/// convert it to jumps and post-initial values, then solve the smooth part.
Solution solve_system(const SysSpec& sys);

/// One-step reference solve with the 0- derivative rule. An improper
/// transform's polynomial part becomes the impulsive output.
Solution lminus_solve(const SysSpec& sys);

/// The conventional misuse this library exists to expose: 0+ derivative rule
/// applied to the original equation with 0- values and impulses transformed
/// to zero. Kept for comparison output only.
Solution naive_lplus_solve(const SysSpec& sys);

struct MethodResult {
    Method method = Method::modified_lplus;
    Solution solution;
    std::vector<double> zero_plus;  // solution's derivatives at 0+
    bool zero_plus_consistent = false;
    double ivt_value = 0.0;
    bool ivt_pass = false;
    double max_deviation = 0.0;  // from the modified solve, on the grid
    bool identically_zero = false;
};

struct MethodComparison {
    std::vector<MethodResult> methods;  // modified, lminus, naive
    std::vector<Rational> post;         // consistent post-initial values
    double t_end = 1.0;
    int grid_points = 400;
};

/// Runs all three methods and compares closed forms, 0+ values, initial-value
/// theorem results, and pointwise deviation on a grid over [0, T] with
/// T = 10/min|Re rate| clamped to [1, 100].
MethodComparison compare_methods(const SysSpec& sys);

/// Inverts a strictly proper transform into exp-poly atoms.
RegSig invert_strictly_proper(const RationalFn& Y, bool* exact = nullptr);

}  // namespace lapinit
