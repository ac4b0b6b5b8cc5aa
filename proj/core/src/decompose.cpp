#include "lapinit/decompose.hpp"

#include <stdexcept>

namespace lapinit {

SingDist sing_shift_down(const SingDist& d, int p) {
    if (p <= 0) return d;
    if (d.max_order() < p) return {};
    std::vector<Rational> out(d.delta_coeffs.begin() + p, d.delta_coeffs.end());
    return SingDist(std::move(out));
}

SingDist input_derivative_singular_part(const GenSignal& input, int k) {
    if (k < 0) return sing_shift_down(input.singular, -k);
    SingDist out = sing_derivative(input.singular, k);
    if (k > 0) {
        std::vector<Rational> jumps(k, Rational(0));
        for (int i = 0; i < k; ++i) {
            Rational post = reg_derivative_at_zero_plus(input.regular, i);
            Rational pre = i == 0 ? input.regular.pre_value : Rational(0);
            jumps[i] = post - pre;
        }
        std::vector<Rational> train(k, Rational(0));
        for (int i = 0; i < k; ++i) train[k - 1 - i] = jumps[i];
        out = out + SingDist(std::move(train));
    }
    return out;
}

SingularSystem build_singular_system(const SysSpec& sys) {
    SingularSystem system;
    system.equations.reserve(sys.n + 1);
    for (int j = 0; j <= sys.n; ++j) {
        SingularSystem::Equation eq;
        eq.lead_order = sys.n - j;
        eq.coeffs.assign(sys.a.begin(), sys.a.begin() + (sys.n - j) + 1);
        SingDist rhs;
        for (int jp = 0; jp <= sys.m; ++jp)
            rhs = rhs + sys.b[jp] * input_derivative_singular_part(sys.input, sys.m - j - jp);
        eq.rhs = std::move(rhs);
        system.equations.push_back(std::move(eq));
    }
    return system;
}

namespace {

// Solves sum_i a_i * shift_down(d, i) = rhs for d, highest order first:
// the coefficient of the order-k impulse reads d_k + sum_{i>=1} a_i d_{k+i}.
SingDist solve_shifted_diagonal(const std::vector<Rational>& a, const SingDist& rhs) {
    int top = rhs.max_order();
    if (top < 0) return {};
    std::vector<Rational> c(top + 1, Rational(0));
    for (int k = top; k >= 0; --k) {
        Rational acc = rhs.coeff(k);
        for (size_t i = 1; i < a.size(); ++i) {
            int idx = k + static_cast<int>(i);
            if (idx <= top) acc -= a[i] * c[idx];
        }
        c[k] = acc;
    }
    return SingDist(std::move(c));
}

}  // namespace

SingularSolution solve_singular_backward(const SingularSystem& system, const SysSpec& sys) {
    if (static_cast<int>(system.equations.size()) != sys.n + 1)
        throw std::invalid_argument("singular system does not match the system order");

    SingularSolution sol;
    sol.derivative_parts.assign(sys.n + 1, SingDist{});

    // Equation j = n involves ys and its integrals only.
    sol.derivative_parts[0] = solve_shifted_diagonal(sys.a, system.equations[sys.n].rhs);

    for (int j = sys.n - 1; j >= 0; --j) {
        const auto& eq = system.equations[j];
        int lead = eq.lead_order;  // n - j >= 1
        SingDist value = eq.rhs;
        for (int i = 1; i <= sys.n; ++i) {
            int order = lead - i;
            SingDist term = order >= 0 ? sol.derivative_parts[order]
                                       : sing_shift_down(sol.derivative_parts[0], -order);
            value = value - sys.a[i] * term;
        }
        sol.derivative_parts[lead] = std::move(value);
    }
    return sol;
}

}  // namespace lapinit
