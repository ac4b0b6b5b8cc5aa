#include "lapinit/jumps.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace lapinit;

namespace {

SingDist D(std::initializer_list<int> coeffs) {
    std::vector<Rational> v;
    for (int c : coeffs) v.push_back(Rational(c));
    return SingDist(std::move(v));
}

SysSpec impulse_system(std::vector<Rational> a, std::vector<Rational> b,
                       std::vector<Rational> pre, Rational magnitude = 1) {
    GenSignal input;
    input.singular = magnitude * D({1});
    return SysSpec::create(std::move(a), std::move(b), std::move(pre), std::move(input));
}

}  // namespace

TEST_SUITE_BEGIN("initialization");

TEST_CASE("jump table for the worked second-order example") {
    SysSpec sys = impulse_system({1, 2, 1}, {1, 0}, {1, -2});
    SingularSolution ss = solve_singular_backward(build_singular_system(sys), sys);
    JumpReport report = compute_jumps(ss, sys);

    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].pre == 1);
    CHECK(report.rows[0].jump == 1);
    CHECK(report.rows[0].post == 2);
    CHECK(report.rows[1].pre == -2);
    CHECK(report.rows[1].jump == -2);
    CHECK(report.rows[1].post == -4);

    CHECK(post_initial_conditions(report) == std::vector<Rational>{2, -4});
}

TEST_CASE("no impulsive content means continuity") {
    GenSignal quiet;
    SysSpec sys = SysSpec::create({1, 1, 1}, {1}, {3, 1}, std::move(quiet));
    SingularSolution ss = solve_singular_backward(build_singular_system(sys), sys);
    JumpReport report = compute_jumps(ss, sys);
    for (const auto& row : report.rows) {
        CHECK(row.jump == 0);
        CHECK(row.post == row.pre);
    }
    CHECK(post_initial_conditions(report) == std::vector<Rational>{3, 1});
}

TEST_CASE("biproper impulse leaves the smooth part continuous") {
    SysSpec sys = impulse_system({1, 1}, {1, 1}, {0});
    SingularSolution ss = solve_singular_backward(build_singular_system(sys), sys);
    // y itself carries the impulse; its smooth part does not jump
    CHECK(ss.derivative_parts[0] == D({1}));
    JumpReport report = compute_jumps(ss, sys);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].jump == 0);
    CHECK(report.rows[0].post == 0);
}

TEST_CASE("first-order impulse jumps the output to one") {
    SysSpec sys = impulse_system({1, 1}, {1}, {0});
    SingularSolution ss = solve_singular_backward(build_singular_system(sys), sys);
    JumpReport report = compute_jumps(ss, sys);
    CHECK(post_initial_conditions(report) == std::vector<Rational>{1});
}

TEST_CASE("post equals pre plus jump for random systems") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 100; ++iter) {
        SysSpec sys = testing::random_system(rng);
        SingularSolution ss = solve_singular_backward(build_singular_system(sys), sys);
        JumpReport report = compute_jumps(ss, sys);
        REQUIRE(static_cast<int>(report.rows.size()) == sys.n);
        for (int k = 0; k < sys.n; ++k) {
            CHECK(report.rows[k].order == k);
            CHECK(report.rows[k].post == report.rows[k].pre + report.rows[k].jump);
            CHECK(report.rows[k].jump == sing_integral_total(ss.derivative_parts[k + 1]));
        }
    }
}

TEST_CASE("jumps scale linearly with the input") {
    std::mt19937 rng(778);
    for (int iter = 0; iter < 50; ++iter) {
        SysSpec sys = testing::random_system(rng);
        GenSignal doubled_input = sys.input;
        doubled_input.singular = Rational(2) * doubled_input.singular;
        SysSpec doubled =
            SysSpec::create(sys.a_original, sys.b_original, sys.y_pre, std::move(doubled_input));

        JumpReport one = compute_jumps(
            solve_singular_backward(build_singular_system(sys), sys), sys);
        JumpReport two = compute_jumps(
            solve_singular_backward(build_singular_system(doubled), doubled), doubled);
        for (int k = 0; k < sys.n; ++k) CHECK(two.rows[k].jump == 2 * one.rows[k].jump);
    }
}

TEST_CASE("impulse response jump sits at the relative degree") {
    std::mt19937 rng(779);
    for (int iter = 0; iter < 40; ++iter) {
        SysSpec base = testing::random_system(rng);
        SysSpec sys = impulse_system(base.a_original, base.b_original, base.y_pre);
        int r = sys.n - sys.m;
        JumpReport report = compute_jumps(
            solve_singular_backward(build_singular_system(sys), sys), sys);
        for (int k = 0; k + 1 < r; ++k) CHECK(report.rows[k].jump == 0);
        if (r >= 1 && r - 1 < sys.n) CHECK(report.rows[r - 1].jump == sys.b[0]);
    }
}

TEST_CASE("mismatched singular solution is rejected") {
    SysSpec sys = impulse_system({1, 2, 1}, {1, 0}, {1, -2});
    SingularSolution wrong;
    wrong.derivative_parts = {SingDist{}, SingDist{}};
    CHECK_THROWS_AS(compute_jumps(wrong, sys), std::invalid_argument);
}

TEST_SUITE_END();
