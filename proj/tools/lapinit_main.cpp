#include "lapinit/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct CommonArgs {
    std::string problem_path;
    std::string method;
    double t_end = 0.0;
    double dt = 0.0;
    std::vector<double> epsilons;
    std::string out_path;
    bool json = false;
    bool allow_order_two = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("problem", args.problem_path, "problem file (JSON)")->required();
    cmd->add_option("--method", args.method, "modified-lplus | lminus | naive-lplus");
    cmd->add_option("--t-end", args.t_end, "sample horizon");
    cmd->add_option("--dt", args.dt, "sample step");
    cmd->add_option("--epsilon", args.epsilons, "mollifier width (repeat for a ladder)");
    cmd->add_option("--out", args.out_path, "write output to a file instead of stdout");
    cmd->add_flag("--json", args.json, "machine-readable report");
    cmd->add_flag("--allow-order-two", args.allow_order_two,
                  "allow mollified second impulse derivatives in verify");
}

lapinit::ProblemFile load(const CommonArgs& args) {
    lapinit::ProblemFile problem = lapinit::parse_problem(args.problem_path);
    if (!args.method.empty()) problem.options.method = lapinit::parse_method(args.method);
    if (args.t_end > 0) problem.options.t_end = args.t_end;
    if (args.dt > 0) problem.options.dt = args.dt;
    if (!args.epsilons.empty()) problem.options.epsilons = args.epsilons;
    if (!args.out_path.empty()) problem.options.out_path = args.out_path;
    if (args.json) problem.options.json = true;
    if (args.allow_order_two) problem.options.allow_order_two = true;
    return problem;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form solver for constant-coefficient ODEs with impulsive inputs"};
    app.require_subcommand(1);

    CommonArgs solve_args, jumps_args, compare_args, sample_args, verify_args;
    CLI::App* solve = app.add_subcommand("solve", "full pipeline: jumps, transform, closed form");
    add_common(solve, solve_args);
    CLI::App* jumps = app.add_subcommand("jumps", "impulsive parts and jump analysis only");
    add_common(jumps, jumps_args);
    CLI::App* compare = app.add_subcommand("compare", "solve by all three methods and compare");
    add_common(compare, compare_args);
    CLI::App* sample = app.add_subcommand("sample", "CSV samples of the smooth solution");
    add_common(sample, sample_args);
    CLI::App* verify = app.add_subcommand("verify", "numerical integration cross-check");
    add_common(verify, verify_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return lapinit::run_solve(load(solve_args), std::cout, std::cerr);
        if (jumps->parsed()) return lapinit::run_jumps(load(jumps_args), std::cout, std::cerr);
        if (compare->parsed()) return lapinit::run_compare(load(compare_args), std::cout, std::cerr);
        if (sample->parsed()) return lapinit::run_sample(load(sample_args), std::cout, std::cerr);
        if (verify->parsed()) return lapinit::run_verify(load(verify_args), std::cout, std::cerr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
