#include "lapinit/oracle.hpp"
#include "lapinit/solve.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace lapinit;

namespace {

SysSpec impulse_second_order() {
    GenSignal input;
    input.singular = SingDist(std::vector<Rational>{1});
    return SysSpec::create({1, 2, 1}, {1, 0}, {1, -2}, std::move(input));
}

SysSpec dense_fifth_order() {
    GenSignal input;
    input.singular = SingDist(std::vector<Rational>{Rational(1, 3), Rational(-2), Rational(5, 4)});
    return SysSpec::create({2, Rational(1, 2), -3, 1, Rational(7, 4), 1},
                           {1, Rational(-1, 3), 2}, {1, 0, Rational(2, 5), -1, Rational(1, 2)},
                           std::move(input));
}

}  // namespace

static void BM_FullSolve(benchmark::State& state) {
    SysSpec sys = impulse_second_order();
    for (auto _ : state) {
        Solution sol = solve_system(sys);
        benchmark::DoNotOptimize(sol.regular.atoms.data());
    }
}
BENCHMARK(BM_FullSolve);

static void BM_FullSolveFifthOrder(benchmark::State& state) {
    SysSpec sys = dense_fifth_order();
    for (auto _ : state) {
        Solution sol = solve_system(sys);
        benchmark::DoNotOptimize(sol.regular.atoms.data());
    }
}
BENCHMARK(BM_FullSolveFifthOrder);

static void BM_SingularBackwardSolve(benchmark::State& state) {
    SysSpec sys = dense_fifth_order();
    for (auto _ : state) {
        SingularSolution sol = solve_singular_backward(build_singular_system(sys), sys);
        benchmark::DoNotOptimize(sol.derivative_parts.data());
    }
}
BENCHMARK(BM_SingularBackwardSolve);

static void BM_PartialFractionsRepeatedPoles(benchmark::State& state) {
    RationalPoly den(Rational(1));
    for (int root : {-1, -1, -2, -2, -3, 3, 4, 5}) {
        den *= RationalPoly(std::vector<Rational>{Rational(-root), Rational(1)});
    }
    RationalFn f(RationalPoly(std::vector<Rational>{1, 2, 3, 4, 5, 6, 7}), den);
    for (auto _ : state) {
        PartialFractionForm form = partial_fractions(f);
        benchmark::DoNotOptimize(form.terms.data());
    }
}
BENCHMARK(BM_PartialFractionsRepeatedPoles);

static void BM_MollifiedIntegration(benchmark::State& state) {
    SysSpec sys = impulse_second_order();
    StateSpace ss = realize_state_space(sys);
    const double eps = 1e-2;
    for (auto _ : state) {
        Trajectory traj = integrate_mollified(ss, sys.input, eps, 2.0, eps / 20.0);
        benchmark::DoNotOptimize(traj.values.data());
    }
}
BENCHMARK(BM_MollifiedIntegration);

BENCHMARK_MAIN();
