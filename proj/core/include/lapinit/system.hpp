#pragma once

#include "lapinit/signals.hpp"

namespace lapinit {

/// Constant-coefficient LTI problem statement:
///   a0 y^(n) + a1 y^(n-1) + ... + an y = b0 x^(m) + ... + bm x
/// with pre-initial output values y(0-), ..., y^(n-1)(0-) and a known input.
/// Coefficients are normalized to a0 = 1 on construction; the originals are
/// kept for reporting.
struct SysSpec {
    std::vector<Rational> a_original;
    std::vector<Rational> b_original;
    std::vector<Rational> a;  // monic, a[0] == 1
    std::vector<Rational> b;  // scaled by 1/a_original[0]
    std::vector<Rational> y_pre;
    GenSignal input;

    int n = 0;
    int m = 0;

    static SysSpec create(std::vector<Rational> a_coeffs, std::vector<Rational> b_coeffs,
                          std::vector<Rational> pre_initial, GenSignal input);
};

struct Decomposition {
    SysSpec singular;  // same coefficients, input reduced to its impulsive part
    SysSpec regular;   // same coefficients, input reduced to its smooth part
};

/// Splits the problem into singular and regular subproblems along the input.
Decomposition decompose(const SysSpec& sys);

}  // namespace lapinit
