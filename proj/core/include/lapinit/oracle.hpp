#pragma once

#include "lapinit/system.hpp"

namespace lapinit {

/// Observer-canonical realization of the problem, in doubles, together with
/// the 0- state recovered from pre-initial output and input values and the
/// linear forms expressing output derivatives in state and input derivatives.
struct StateSpace {
    int n = 0;
    std::vector<double> A;  // n x n, row-major: column 0 holds -a_1..-a_n, superdiagonal 1
    std::vector<double> B;  // beta_1 .. beta_n
    std::vector<double> C;  // (1, 0, ..., 0)
    double D = 0.0;         // beta_0, nonzero only when n == m

    std::vector<double> x0;  // state at 0-

    // y^(k) = output_state[k] . x + sum_i output_input[k][i] * u^(i)
    std::vector<std::vector<double>> output_state;  // k = 0..n-1 (n x n)
    std::vector<std::vector<double>> output_input;  // k-th row has k+1 entries

    double a(int i, int j) const { return A[i * n + j]; }
};

StateSpace realize_state_space(const SysSpec& sys);

/// Transfer function value C (sI - A)^-1 B + D at one complex frequency.
std::complex<double> state_space_transfer(const StateSpace& ss, std::complex<double> s);

struct Trajectory {
    std::vector<double> times;
    std::vector<double> values;
    double epsilon = 0.0;
};

/// Fixed-step RK4 integration with every impulse replaced by a unit-area C^2
/// bump of width epsilon (derivatives of the bump stand in for derivatives of
/// the impulse; order 2 is gated behind allow_order_two, higher orders are
/// rejected). Step size is epsilon/40 while the pulse is active, then dt.
/// Requires dt <= epsilon/20 and t_end > 10*epsilon.
Trajectory integrate_mollified(const StateSpace& ss, const GenSignal& input, double epsilon,
                               double t_end, double dt, bool allow_order_two = false);

/// Unit-area bump on [0, epsilon] and its first two derivatives.
double mollifier(double t, double epsilon, int derivative);

struct JumpEstimate {
    int order = 0;
    std::vector<double> raw;     // estimate per width, in the order given
    double extrapolated = 0.0;   // width -> 0 limit from the last pair
    bool converged = true;
};

/// Jump estimates for y^(k), k = 0..n-1: output derivative at t = 5*eps minus
/// its 0- value, Richardson-extrapolated across the width ladder. Widths must
/// be decreasing with ratio >= 2. Non-Cauchy sequences are flagged, not fatal.
std::vector<JumpEstimate> estimate_jumps(const StateSpace& ss, const GenSignal& input,
                                         const std::vector<double>& epsilons,
                                         bool allow_order_two = false);

}  // namespace lapinit
