#pragma once

#include "lapinit/system.hpp"

namespace lapinit {

/// The family obtained by integrating the system equation j = 0..n times and
/// projecting onto impulsive content. Equation j reads
///   sum_{i=0}^{n} a_i [y^(n-j-i)]_s = rhs_j
/// where terms of negative order are integrals: their impulsive content is
/// the impulse train of y shifted down (an order-k impulse integrates to an
/// order k-1 impulse, and the order-0 impulse integrates to a step, which is
/// smooth). rhs_j collects the input's content the same way.
struct SingularSystem {
    struct Equation {
        int lead_order = 0;            // n - j
        std::vector<Rational> coeffs;  // a_0 .. a_{n-j}, the nonnegative orders
        SingDist rhs;
    };
    std::vector<Equation> equations;  // index j = 0..n
};

/// p-fold integral of an impulse train: coefficients shift down by p, content
/// that reaches order 0 integrates into smooth steps and drops out.
SingDist sing_shift_down(const SingDist& d, int p);

/// Impulsive content of the distributional derivative x^(k). Besides the
/// derivatives of the explicit impulse train this includes the impulses
/// created by differentiating across the origin jump of the smooth part
/// (its value and derivatives on t >= 0 versus the constant pre-history).
/// Negative k means integration and keeps only shifted-down train content.
SingDist input_derivative_singular_part(const GenSignal& input, int k);

SingularSystem build_singular_system(const SysSpec& sys);

/// Impulse-train content of y and its first n derivatives.
struct SingularSolution {
    std::vector<SingDist> derivative_parts;  // y^(0) .. y^(n)
};

/// Back-substitution through the integrated family: equation n pins ys by a
/// highest-order-first coefficient recursion (its own integrals appear in the
/// lower coefficients), each earlier equation then yields the next
/// derivative directly. Exact throughout.
SingularSolution solve_singular_backward(const SingularSystem& system, const SysSpec& sys);

}  // namespace lapinit
