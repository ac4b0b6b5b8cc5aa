#include "lapinit/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lapinit {

namespace {

// sum_i coeffs[i] * sum_{k < d_i} s^(d_i-1-k) * values[k], with d_i the
// derivative order coeffs[i] multiplies. This is the polynomial the one-sided
// derivative rule accumulates from initial values.
RationalPoly initial_value_polynomial(const std::vector<Rational>& coeffs,
                                      const std::vector<Rational>& values) {
    const int top = static_cast<int>(coeffs.size()) - 1;
    RationalPoly acc;
    for (int i = 0; i <= top; ++i) {
        const int d = top - i;
        for (int k = 0; k < d; ++k) {
            Rational v = k < static_cast<int>(values.size()) ? values[k] : Rational(0);
            if (v == 0 || coeffs[i] == 0) continue;
            acc += RationalPoly::monomial(coeffs[i] * v, d - 1 - k);
        }
    }
    return acc;
}

RationalPoly operator_poly(const std::vector<Rational>& coeffs) {
    const int top = static_cast<int>(coeffs.size()) - 1;
    std::vector<Rational> c(top + 1, Rational(0));
    for (int i = 0; i <= top; ++i) c[top - i] = coeffs[i];
    return RationalPoly(std::move(c));
}

void verify_inversion(const RationalFn& Y, const PartialFractionForm& form) {
    if (form.exact) return;
    double radius = 1.0;
    for (const auto& t : form.terms) radius = std::max(radius, std::abs(t.pole.to_complex()));
    for (int j = 1; j <= 5; ++j) {
        std::complex<double> s{radius + j, 0.5};
        std::complex<double> direct = ratfn_eval(Y, s);
        std::complex<double> recombined = form.eval(s);
        if (std::abs(direct - recombined) > 1e-8 * (1.0 + std::abs(direct)))
            throw std::logic_error("pole/atom reconstruction residue imbalance");
    }
}

JumpReport stage_two_report(const SysSpec& sys) {
    SingularSolution ss = solve_singular_backward(build_singular_system(sys), sys);
    return compute_jumps(ss, sys);
}

std::vector<Rational> input_pre_values(const SysSpec& sys) {
    std::vector<Rational> xpre(std::max(sys.m, 0), Rational(0));
    if (sys.m > 0) xpre[0] = sys.input.regular.pre_value;
    return xpre;
}

Rational output_pre_value(const SysSpec& sys) {
    if (sys.n > 0) return sys.y_pre[0];
    return sys.b[sys.m] * sys.input.regular.pre_value;
}

Solution finish_solution(const SysSpec& sys, RationalFn transform_regular, SingDist singular,
                         JumpReport report, Method method) {
    bool exact = true;
    RegSig regular = invert_strictly_proper(transform_regular, &exact);
    regular.pre_value = output_pre_value(sys);
    Solution sol = combine_solution(std::move(regular), std::move(singular));
    sol.transform = std::move(transform_regular);
    sol.report = std::move(report);
    sol.method = method;
    sol.exact = exact;
    return sol;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::modified_lplus: return "modified-lplus";
        case Method::lminus: return "lminus";
        case Method::naive_lplus: return "naive-lplus";
    }
    return "?";
}

RegSig invert_strictly_proper(const RationalFn& Y, bool* exact) {
    if (Y.is_zero()) {
        if (exact) *exact = true;
        return {};
    }
    if (!Y.is_strictly_proper())
        throw std::logic_error("impulsive content leaked into the smooth transform");

    PartialFractionForm form = partial_fractions(Y);
    RegSig g;
    for (const auto& term : form.terms) {
        GaussianRational c = term.residue / GaussianRational(factorial(term.order - 1));
        g.atoms.push_back({c, term.order - 1, term.pole});
    }
    g = reg_canonical(std::move(g));

    if (form.exact) {
        if (reg_laplace(g) != Y) throw std::logic_error("pole/atom reconstruction residue imbalance");
    } else {
        verify_inversion(Y, form);
    }
    if (exact) *exact = form.exact;
    return g;
}

Solution combine_solution(RegSig regular, SingDist singular) {
    Solution sol;
    sol.regular = std::move(regular);
    sol.singular = std::move(singular);
    return sol;
}

std::pair<double, bool> ivt_check(const RationalFn& Y, const Rational& expected_post) {
    if (Y.num().degree() > Y.den().degree())
        throw std::domain_error("initial value theorem requires a proper transform");
    Rational value = Y.num().coeff(Y.den().degree() - 1) / Y.den().leading();
    Rational diff = value - expected_post;
    double tol = 1e-9 * (1.0 + std::fabs(to_double(expected_post)));
    bool pass = std::fabs(to_double(diff)) <= tol;
    return {to_double(value), pass};
}

Solution lplus_solve_regular(const SysSpec& sys, const std::vector<Rational>& post) {
    if (static_cast<int>(post.size()) != sys.n)
        throw std::invalid_argument("post-initial values must match the system order");

    const RegSig& xr = sys.input.regular;
    RationalFn X = reg_laplace(xr);
    std::vector<Rational> x0p(std::max(sys.m, 0), Rational(0));
    for (int i = 0; i < sys.m; ++i) x0p[i] = reg_derivative_at_zero_plus(xr, i);

    RationalFn numerator = RationalFn(initial_value_polynomial(sys.a, post)) -
                           RationalFn(initial_value_polynomial(sys.b, x0p)) +
                           RationalFn(operator_poly(sys.b)) * X;
    RationalFn Y = numerator / RationalFn(operator_poly(sys.a));

    return finish_solution(sys, std::move(Y), SingDist{}, stage_two_report(sys),
                           Method::modified_lplus);
}

Solution solve_system(const SysSpec& sys) {
    SingularSolution ss = solve_singular_backward(build_singular_system(sys), sys);
    JumpReport report = compute_jumps(ss, sys);
    std::vector<Rational> post = post_initial_conditions(report);

    Decomposition parts = decompose(sys);
    Solution sol = lplus_solve_regular(parts.regular, post);
    sol.singular = ss.derivative_parts[0];
    sol.report = std::move(report);
    return sol;
}

Solution lminus_solve(const SysSpec& sys) {
    const RegSig& xr = sys.input.regular;
    RationalFn X = reg_laplace(xr) + RationalFn(RationalPoly(sys.input.singular.delta_coeffs));

    RationalFn numerator = RationalFn(initial_value_polynomial(sys.a, sys.y_pre)) -
                           RationalFn(initial_value_polynomial(sys.b, input_pre_values(sys))) +
                           RationalFn(operator_poly(sys.b)) * X;
    RationalFn Y = numerator / RationalFn(operator_poly(sys.a));

    auto [poly_part, proper] = Y.split_polynomial();
    return finish_solution(sys, std::move(proper), SingDist(poly_part.coeffs()),
                           stage_two_report(sys), Method::lminus);
}

Solution naive_lplus_solve(const SysSpec& sys) {
    const RegSig& xr = sys.input.regular;
    RationalFn X = reg_laplace(xr);  // impulse content transforms to zero here

    RationalFn numerator = RationalFn(initial_value_polynomial(sys.a, sys.y_pre)) -
                           RationalFn(initial_value_polynomial(sys.b, input_pre_values(sys))) +
                           RationalFn(operator_poly(sys.b)) * X;
    RationalFn Y = numerator / RationalFn(operator_poly(sys.a));

    return finish_solution(sys, std::move(Y), SingDist{}, stage_two_report(sys),
                           Method::naive_lplus);
}

MethodComparison compare_methods(const SysSpec& sys) {
    MethodComparison cmp;
    Solution modified = solve_system(sys);
    cmp.post = post_initial_conditions(modified.report);

    double min_re = std::numeric_limits<double>::infinity();
    for (const auto& a : modified.regular.atoms)
        min_re = std::min(min_re, std::fabs(to_double(a.rate.re)));
    double t_end = 100.0;
    if (std::isfinite(min_re) && min_re > 0.0) t_end = 10.0 / min_re;
    if (modified.regular.atoms.empty()) t_end = 1.0;
    cmp.t_end = std::clamp(t_end, 1.0, 100.0);

    Solution lminus = lminus_solve(sys);
    Solution naive = naive_lplus_solve(sys);
    const RegSig reference_regular = modified.regular;

    auto analyze = [&](Solution sol) {
        MethodResult r;
        r.method = sol.method;
        r.identically_zero = sol.regular.is_zero() && sol.singular.is_zero();
        r.zero_plus_consistent = true;
        for (int k = 0; k < sys.n; ++k) {
            Rational value = reg_derivative_at_zero_plus(sol.regular, k);
            r.zero_plus.push_back(to_double(value));
            double tol = 1e-9 * (1.0 + std::fabs(to_double(cmp.post[k])));
            if (std::fabs(to_double(value - cmp.post[k])) > tol) r.zero_plus_consistent = false;
        }
        if (sys.n > 0) {
            auto [value, pass] = ivt_check(sol.transform, cmp.post[0]);
            r.ivt_value = value;
            r.ivt_pass = pass;
        } else {
            r.ivt_pass = true;
        }
        double dev = 0.0;
        for (int i = 0; i < cmp.grid_points; ++i) {
            double t = cmp.t_end * i / (cmp.grid_points - 1);
            double va = reg_eval(sol.regular, t);
            double vb = reg_eval(reference_regular, t);
            if (std::isfinite(va) && std::isfinite(vb)) dev = std::max(dev, std::fabs(va - vb));
        }
        r.max_deviation = dev;
        r.solution = std::move(sol);
        return r;
    };

    cmp.methods.push_back(analyze(std::move(modified)));
    cmp.methods.push_back(analyze(std::move(lminus)));
    cmp.methods.push_back(analyze(std::move(naive)));
    return cmp;
}

}  // namespace lapinit
