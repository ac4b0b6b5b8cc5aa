#include "lapinit/runner.hpp"

#include "lapinit/oracle.hpp"
#include "lapinit/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

namespace lapinit {

namespace {

using nlohmann::json;

double default_t_end(const Solution& sol) {
    double min_re = std::numeric_limits<double>::infinity();
    for (const auto& a : sol.regular.atoms) min_re = std::min(min_re, std::fabs(to_double(a.rate.re)));
    if (sol.regular.atoms.empty()) return 1.0;
    double t = (std::isfinite(min_re) && min_re > 0.0) ? 10.0 / min_re : 100.0;
    return std::clamp(t, 1.0, 100.0);
}

Solution solve_with_method(const ProblemFile& problem) {
    switch (problem.options.method) {
        case Method::modified_lplus: return solve_system(problem.sys);
        case Method::lminus: return lminus_solve(problem.sys);
        case Method::naive_lplus: return naive_lplus_solve(problem.sys);
    }
    throw std::logic_error("unreachable");
}

struct ConsistencyOutcome {
    bool zero_plus_ok = true;
    bool ivt_ok = true;
    double ivt_value = 0.0;
    std::vector<double> zero_plus;
};

ConsistencyOutcome check_solution(const SysSpec& sys, const Solution& sol) {
    ConsistencyOutcome outcome;
    std::vector<Rational> post = post_initial_conditions(sol.report);
    for (int k = 0; k < sys.n; ++k) {
        Rational value = reg_derivative_at_zero_plus(sol.regular, k);
        outcome.zero_plus.push_back(to_double(value));
        double tol = 1e-9 * (1.0 + std::fabs(to_double(post[k])));
        if (std::fabs(to_double(value - post[k])) > tol) outcome.zero_plus_ok = false;
    }
    if (sys.n > 0) {
        auto [value, pass] = ivt_check(sol.transform, post[0]);
        outcome.ivt_value = value;
        outcome.ivt_ok = pass;
    }
    return outcome;
}

json jump_report_json(const JumpReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"order", row.order},
                        {"pre", to_double(row.pre)},
                        {"pre_exact", format_rational(row.pre)},
                        {"jump", to_double(row.jump)},
                        {"jump_exact", format_rational(row.jump)},
                        {"post", to_double(row.post)},
                        {"post_exact", format_rational(row.post)}});
    }
    return rows;
}

json solution_json(const Solution& sol) {
    json atoms = json::array();
    for (const auto& a : sol.regular.atoms) {
        atoms.push_back({{"coeff_re", to_double(a.coeff.re)},
                         {"coeff_re_exact", format_rational(a.coeff.re)},
                         {"coeff_im", to_double(a.coeff.im)},
                         {"coeff_im_exact", format_rational(a.coeff.im)},
                         {"power", a.power},
                         {"rate_re", to_double(a.rate.re)},
                         {"rate_re_exact", format_rational(a.rate.re)},
                         {"rate_im", to_double(a.rate.im)},
                         {"rate_im_exact", format_rational(a.rate.im)}});
    }
    json singular = json::array();
    for (int k = 0; k <= sol.singular.max_order(); ++k) {
        if (sol.singular.coeff(k) == 0) continue;
        singular.push_back({{"order", k},
                            {"coeff", to_double(sol.singular.coeff(k))},
                            {"coeff_exact", format_rational(sol.singular.coeff(k))}});
    }
    auto poly_list = [](const RationalPoly& p) {
        json arr = json::array();
        for (int k = 0; k <= p.degree(); ++k) arr.push_back(format_rational(p.coeff(k)));
        return arr;
    };
    return {{"method", method_name(sol.method)},
            {"exact", sol.exact},
            {"transform",
             {{"num", poly_list(sol.transform.num())},
              {"den", poly_list(sol.transform.den())},
              {"rendered", format_ratfn(sol.transform)}}},
            {"regular", {{"atoms", atoms}, {"rendered", format_regsig(sol.regular, sol.exact)}}},
            {"singular", {{"terms", singular}, {"rendered", format_singdist(sol.singular)}}},
            {"jumps", jump_report_json(sol.report)}};
}

void print_jump_rows(const JumpReport& report, std::ostream& out) {
    for (const auto& row : report.rows) {
        std::string label = derivative_label(row.order);
        out << "  " << label << "(0-) = " << format_rational(row.pre)
            << ", jump = " << format_rational(row.jump) << ", " << label
            << "(0+) = " << format_rational(row.post) << "\n";
    }
}

void print_system_header(const SysSpec& sys, std::ostream& out) {
    out << "system: order n=" << sys.n << ", input order m=" << sys.m << "\n";
    out << "  a = [";
    for (int i = 0; i <= sys.n; ++i) out << (i ? ", " : "") << format_rational(sys.a_original[i]);
    out << "], b = [";
    for (int j = 0; j <= sys.m; ++j) out << (j ? ", " : "") << format_rational(sys.b_original[j]);
    out << "]\n";
    out << "  input: singular = " << format_singdist(sys.input.singular)
        << ", regular = " << format_regsig(sys.input.regular)
        << ", pre_value = " << format_rational(sys.input.regular.pre_value) << "\n";
}

std::ostream& open_output(const ProblemFile& problem, std::ofstream& file, std::ostream& fallback) {
    if (problem.options.out_path.empty()) return fallback;
    file.open(problem.options.out_path);
    if (!file) throw std::invalid_argument("cannot open output file '" + problem.options.out_path + "'");
    return file;
}

}  // namespace

int run_solve(const ProblemFile& problem, std::ostream& out_stream, std::ostream& err) {
    std::ofstream file;
    std::ostream& out = open_output(problem, file, out_stream);

    Solution sol = solve_with_method(problem);
    ConsistencyOutcome outcome = check_solution(problem.sys, sol);

    if (problem.options.json) {
        json j = solution_json(sol);
        j["post_initial"] = json::array();
        for (const auto& row : sol.report.rows) j["post_initial"].push_back(to_double(row.post));
        j["ivt"] = {{"value", outcome.ivt_value}, {"pass", outcome.ivt_ok}};
        j["zero_plus"] = outcome.zero_plus;
        j["zero_plus_consistent"] = outcome.zero_plus_ok;
        if (sol.method == Method::naive_lplus)
            j["warnings"] = {"naive-lplus zeroes impulse transforms and reuses 0- values; "
                             "output kept only to demonstrate the inconsistency"};
        out << j.dump(2) << "\n";
    } else {
        out << "method: " << method_name(sol.method) << "\n";
        print_system_header(problem.sys, out);
        if (sol.method == Method::naive_lplus)
            out << "warning: naive-lplus zeroes impulse transforms and reuses 0- values; "
                   "output kept only to demonstrate the inconsistency\n";
        out << "jump analysis:\n";
        print_jump_rows(sol.report, out);
        out << "post-initial conditions: [";
        for (size_t i = 0; i < sol.report.rows.size(); ++i)
            out << (i ? ", " : "") << format_rational(sol.report.rows[i].post);
        out << "]\n";
        out << "Y_r(s) = " << format_ratfn(sol.transform) << "\n";
        out << "y_r(t) = " << format_regsig(sol.regular, sol.exact) << "\n";
        out << "y_s(t) = " << format_singdist(sol.singular) << "\n";
        out << "y(t) = ";
        if (sol.regular.is_zero() && !sol.singular.is_zero()) {
            out << format_singdist(sol.singular);
        } else {
            out << format_regsig(sol.regular, sol.exact);
            if (!sol.singular.is_zero()) out << " + " << format_singdist(sol.singular);
        }
        out << "\n";
        if (problem.sys.n > 0)
            out << "IVT: lim s*Y_r(s) = " << format_double(outcome.ivt_value) << " (expected "
                << format_rational(sol.report.rows.empty() ? Rational(0) : sol.report.rows[0].post)
                << ") [" << (outcome.ivt_ok ? "ok" : "MISMATCH") << "]\n";
        out << "0+ consistency: " << (outcome.zero_plus_ok ? "ok" : "MISMATCH") << "\n";
    }

    if (!outcome.zero_plus_ok || !outcome.ivt_ok) {
        err << "consistency check failed: solution does not reproduce its post-initial values\n";
        return 2;
    }
    return 0;
}

int run_jumps(const ProblemFile& problem, std::ostream& out_stream, std::ostream& err) {
    std::ofstream file;
    std::ostream& out = open_output(problem, file, out_stream);
    (void)err;

    SingularSolution ss = solve_singular_backward(build_singular_system(problem.sys), problem.sys);
    JumpReport report = compute_jumps(ss, problem.sys);

    if (problem.options.json) {
        json j;
        j["jumps"] = jump_report_json(report);
        json parts = json::array();
        for (size_t k = 0; k < ss.derivative_parts.size(); ++k)
            parts.push_back({{"order", k}, {"rendered", format_singdist(ss.derivative_parts[k])}});
        j["singular_parts"] = parts;
        out << j.dump(2) << "\n";
        return 0;
    }

    print_system_header(problem.sys, out);
    out << "singular parts:\n";
    for (size_t k = 0; k < ss.derivative_parts.size(); ++k)
        out << "  " << derivative_label(static_cast<int>(k))
            << "_s = " << format_singdist(ss.derivative_parts[k]) << "\n";
    out << "jump analysis:\n";
    print_jump_rows(report, out);
    return 0;
}

int run_compare(const ProblemFile& problem, std::ostream& out_stream, std::ostream& err) {
    std::ofstream file;
    std::ostream& out = open_output(problem, file, out_stream);
    (void)err;

    MethodComparison cmp = compare_methods(problem.sys);

    if (problem.options.json) {
        json j;
        j["t_end"] = cmp.t_end;
        j["grid_points"] = cmp.grid_points;
        j["post_initial"] = json::array();
        for (const auto& p : cmp.post) j["post_initial"].push_back(to_double(p));
        json methods = json::array();
        for (const auto& r : cmp.methods) {
            methods.push_back({{"method", method_name(r.method)},
                               {"closed_form", format_regsig(r.solution.regular, r.solution.exact)},
                               {"singular", format_singdist(r.solution.singular)},
                               {"transform", format_ratfn(r.solution.transform)},
                               {"zero_plus", r.zero_plus},
                               {"zero_plus_consistent", r.zero_plus_consistent},
                               {"ivt_value", r.ivt_value},
                               {"ivt_pass", r.ivt_pass},
                               {"max_deviation", r.max_deviation},
                               {"identically_zero", r.identically_zero}});
        }
        j["methods"] = methods;
        out << j.dump(2) << "\n";
        return 0;
    }

    print_system_header(problem.sys, out);
    out << "consistent post-initial conditions: [";
    for (size_t i = 0; i < cmp.post.size(); ++i) out << (i ? ", " : "") << format_rational(cmp.post[i]);
    out << "]\n";
    out << "comparison grid: " << cmp.grid_points << " points on [0, " << format_double(cmp.t_end)
        << "]\n";
    for (const auto& r : cmp.methods) {
        out << "method " << method_name(r.method) << ":\n";
        out << "  y_r(t) = " << format_regsig(r.solution.regular, r.solution.exact) << "\n";
        out << "  y_s(t) = " << format_singdist(r.solution.singular) << "\n";
        out << "  Y_r(s) = " << format_ratfn(r.solution.transform) << "\n";
        out << "  0+ values = [";
        for (size_t i = 0; i < r.zero_plus.size(); ++i)
            out << (i ? ", " : "") << format_double(r.zero_plus[i]);
        out << "] " << (r.zero_plus_consistent ? "[consistent]" : "[INCONSISTENT]") << "\n";
        out << "  IVT value = " << format_double(r.ivt_value) << " "
            << (r.ivt_pass ? "[ok]" : "[MISMATCH]") << "\n";
        out << "  max deviation from modified-lplus = " << format_double(r.max_deviation) << "\n";
        if (r.identically_zero) out << "  note: solution is identically zero\n";
        if (r.method == Method::naive_lplus)
            out << "  warning: naive-lplus zeroes impulse transforms; comparison output only\n";
    }
    return 0;
}

int run_sample(const ProblemFile& problem, std::ostream& out_stream, std::ostream& err) {
    std::ofstream file;
    std::ostream& out = open_output(problem, file, out_stream);
    (void)err;

    Solution sol = solve_with_method(problem);
    double t_end = problem.options.t_end > 0 ? problem.options.t_end : default_t_end(sol);
    double dt = problem.options.dt > 0 ? problem.options.dt : t_end / 400.0;

    if (!sol.singular.is_zero()) out << "# singular: " << format_singdist(sol.singular) << "\n";
    out << "t,y_regular\n";
    for (double t = 0.0; t <= t_end + 0.5 * dt; t += dt)
        out << format_double(t) << "," << format_double(reg_eval(sol.regular, t)) << "\n";
    return 0;
}

int run_verify(const ProblemFile& problem, std::ostream& out_stream, std::ostream& err) {
    std::ofstream file;
    std::ostream& out = open_output(problem, file, out_stream);

    const SysSpec& sys = problem.sys;
    if (sys.n < 1) {
        err << "verify requires a system of order n >= 1\n";
        return 1;
    }

    Solution sol = solve_system(sys);
    StateSpace ss = realize_state_space(sys);

    std::vector<double> epsilons = problem.options.epsilons;
    if (epsilons.empty()) epsilons = {1e-2, 5e-3, 2.5e-3};

    auto estimates = estimate_jumps(ss, sys.input, epsilons, problem.options.allow_order_two);

    bool ok = true;
    out << "jump verification (mollifier widths:";
    for (double e : epsilons) out << " " << format_double(e);
    out << ")\n";
    for (const auto& est : estimates) {
        Rational analytic = sol.report.rows[est.order].jump;
        double err_abs = std::fabs(est.extrapolated - to_double(analytic));
        bool pass = err_abs <= 1e-2 * (1.0 + std::fabs(to_double(analytic)));
        ok = ok && pass && est.converged;
        out << "  " << derivative_label(est.order) << " jump: raw = [";
        for (size_t i = 0; i < est.raw.size(); ++i) out << (i ? ", " : "") << format_double(est.raw[i]);
        out << "], extrapolated = " << format_double(est.extrapolated)
            << ", analytic = " << format_rational(analytic) << " ["
            << (pass ? "ok" : "MISMATCH") << (est.converged ? "" : ", non-convergent") << "]\n";
    }

    double t_end = problem.options.t_end > 0 ? problem.options.t_end : std::max(8.0, 20.0 * epsilons[0]);
    out << "trajectory agreement on [10*eps, " << format_double(t_end) << "]:\n";
    double prev_err = std::numeric_limits<double>::infinity();
    for (double eps : epsilons) {
        double dt = eps / 20.0;
        Trajectory traj = integrate_mollified(ss, sys.input, eps, t_end, dt,
                                              problem.options.allow_order_two);
        double max_err = 0.0;
        for (size_t i = 0; i < traj.times.size(); ++i) {
            if (traj.times[i] < 10.0 * eps) continue;
            max_err = std::max(max_err, std::fabs(traj.values[i] - reg_eval(sol.regular, traj.times[i])));
        }
        out << "  eps = " << format_double(eps) << ": max |sim - analytic| = "
            << format_double(max_err) << "\n";
        if (max_err > prev_err) ok = false;
        prev_err = max_err;
    }

    if (!ok) {
        err << "oracle disagreement: numerical integration does not confirm the analytic solution\n";
        return 2;
    }
    out << "oracle agreement: ok\n";
    return 0;
}

}  // namespace lapinit
