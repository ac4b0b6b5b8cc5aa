#include "lapinit/partial_fractions.hpp"
#include "lapinit/render.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace lapinit;

namespace {

RationalPoly P(std::initializer_list<int> coeffs) {
    std::vector<Rational> v;
    for (int c : coeffs) v.push_back(Rational(c));
    return RationalPoly(std::move(v));
}

const RationalPoly s_plus_1 = P({1, 1});

}  // namespace

TEST_SUITE_BEGIN("algebra");

TEST_CASE("polynomial arithmetic basics") {
    RationalPoly sq = s_plus_1 * s_plus_1;
    CHECK(sq == P({1, 2, 1}));

    RationalPoly p = P({3, 0, -2, 7});
    CHECK(p + RationalPoly{} == p);

    auto [q, r] = divmod(P({1, 2, 1}), s_plus_1);
    CHECK(q == s_plus_1);
    CHECK(r.is_zero());

    CHECK_THROWS_AS(divmod(p, RationalPoly{}), std::domain_error);
}

TEST_CASE("double-precision scalars are a supported polynomial kind") {
    DoublePoly p(std::vector<double>{0.5, 1.0});
    DoublePoly q = p * p;
    CHECK(q.coeffs() == std::vector<double>{0.25, 1.0, 1.0});
    auto [quot, rem] = divmod(q, p);
    CHECK(quot == p);
    CHECK(rem.is_zero());
    CHECK(q.eval(2.0) == doctest::Approx(6.25));
}

TEST_CASE("polynomial canonical trimming") {
    RationalPoly p(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    RationalPoly diff = P({1, 1}) - P({0, 1});
    CHECK(diff.degree() == 0);
    CHECK(RationalPoly{}.degree() == -1);
}

TEST_CASE("divmod round trip on random polynomials") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<Rational> pc(deg(rng) + 1), qc(deg(rng) + 1);
        for (auto& c : pc) c = testing::random_rational(rng);
        for (auto& c : qc) c = testing::random_rational(rng);
        RationalPoly p(std::move(pc)), q(std::move(qc));
        if (q.is_zero()) continue;
        std::vector<Rational> rc(std::max(q.degree(), 0));
        for (auto& c : rc) c = testing::random_rational(rng);
        RationalPoly r(std::move(rc));
        if (r.degree() >= q.degree()) r = divmod(r, q).second;

        auto [qq, rr] = divmod(p * q + r, q);
        CHECK(qq == p);
        CHECK(rr == r);
    }
}

TEST_CASE("roots of simple polynomials") {
    RootSet rs = poly_roots(P({1, 2, 1}));
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0].multiplicity == 2);
    CHECK(std::abs(rs.roots[0].value - std::complex<double>(-1.0, 0.0)) < 1e-12);

    rs = poly_roots(P({1, 0, 1}));
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0].value == std::conj(rs.roots[1].value));
    CHECK(std::abs(std::abs(rs.roots[0].value.imag()) - 1.0) < 1e-12);

    rs = poly_roots(s_plus_1);
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0].value.real() == doctest::Approx(-1.0));

    CHECK_THROWS_AS(poly_roots(P({3})), std::domain_error);
    CHECK_THROWS_AS(poly_roots(RationalPoly{}), std::domain_error);
}

TEST_CASE("roots recovered from known factorizations") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> mult(1, 3);
    std::uniform_int_distribution<int> kind(0, 1);
    for (int iter = 0; iter < 30; ++iter) {
        // build an exact polynomial from chosen roots with multiplicities
        struct Planted {
            std::complex<double> value;
            int multiplicity;
        };
        std::vector<Planted> planted;
        RationalPoly p(Rational(1));
        int blocks = 1 + iter % 3;
        for (int blk = 0; blk < blocks; ++blk) {
            int k = mult(rng);
            if (kind(rng)) {
                Rational re = testing::random_rational(rng);
                Rational im = testing::random_nonzero_rational(rng);
                RationalPoly quad(std::vector<Rational>{re * re + im * im, -2 * re, Rational(1)});
                p *= quad.pow(k);
                planted.push_back({{to_double(re), std::fabs(to_double(im))}, k});
                planted.push_back({{to_double(re), -std::fabs(to_double(im))}, k});
            } else {
                Rational root = testing::random_rational(rng);
                RationalPoly lin(std::vector<Rational>{-root, Rational(1)});
                p *= lin.pow(k);
                planted.push_back({{to_double(root), 0.0}, k});
            }
        }

        RootSet rs = poly_roots(p);
        CHECK(rs.total_multiplicity() == p.degree());
        for (const auto& want : planted) {
            int found = 0;
            for (const auto& got : rs.roots)
                if (std::abs(got.value - want.value) <= 1e-7) found += got.multiplicity;
            // coincidental root collisions between blocks merge multiplicities
            CHECK(found >= want.multiplicity);
        }
    }
}

TEST_CASE("partial fractions of the repeated-pole transform") {
    RationalFn f(P({0, 2}), P({1, 2, 1}));
    PartialFractionForm form = partial_fractions(f);
    CHECK(form.exact);
    CHECK(form.polynomial_part.is_zero());
    REQUIRE(form.terms.size() == 2);
    for (const auto& term : form.terms) {
        CHECK(term.pole == GaussianRational(-1));
        if (term.order == 1) CHECK(term.residue == GaussianRational(2));
        if (term.order == 2) CHECK(term.residue == GaussianRational(-2));
    }
}

TEST_CASE("partial fractions by the cover-up rule") {
    RationalFn f(P({1}), P({0, 1, 1}));  // 1/(s(s+1))
    PartialFractionForm form = partial_fractions(f);
    CHECK(form.exact);
    REQUIRE(form.terms.size() == 2);
    for (const auto& term : form.terms) {
        CHECK(term.order == 1);
        if (term.pole == GaussianRational(0)) CHECK(term.residue == GaussianRational(1));
        if (term.pole == GaussianRational(-1)) CHECK(term.residue == GaussianRational(-1));
    }
}

TEST_CASE("improper fraction moves into the polynomial part") {
    // multiplication oracle first: (s^2 - s + 1)(s + 1) == s^3 + 1
    RationalPoly expected_quotient = P({1, -1, 1});
    CHECK(expected_quotient * s_plus_1 == P({1, 0, 0, 1}));

    RationalFn f(P({1, 0, 0, 1}), s_plus_1);
    PartialFractionForm form = partial_fractions(f);
    CHECK(form.polynomial_part == expected_quotient);
    CHECK(form.terms.empty());
}

TEST_CASE("partial fractions recombine to the source") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> pick(-4.0, 4.0);
    for (int iter = 0; iter < 40; ++iter) {
        RationalFn f = testing::random_factored_ratfn(rng, iter % 5 == 4);
        PartialFractionForm form = partial_fractions(f);
        int checked = 0;
        while (checked < 20) {
            std::complex<double> s{pick(rng), pick(rng)};
            std::complex<double> direct;
            try {
                direct = ratfn_eval(f, s);
            } catch (const std::domain_error&) {
                continue;  // hit a pole, draw again
            }
            std::complex<double> recombined = form.eval(s);
            CHECK(std::abs(direct - recombined) <= 1e-9 * (1.0 + std::abs(direct)));
            ++checked;
        }
    }
}

TEST_CASE("rational function evaluation") {
    RationalFn f(P({0, 2}), P({1, 2, 1}));
    CHECK(ratfn_eval(f, {1.0, 0.0}).real() == doctest::Approx(0.5));
    CHECK(std::abs(ratfn_eval(f, {0.0, 0.0})) == 0.0);

    PartialFractionForm form = partial_fractions(f);
    CHECK(std::abs(form.eval({3.0, 0.0}) - std::complex<double>(0.375, 0.0)) < 1e-12);
    CHECK(ratfn_eval(f, {3.0, 0.0}).real() == doctest::Approx(0.375));

    CHECK_THROWS_AS(ratfn_eval(f, {-1.0, 0.0}), std::domain_error);
}

TEST_CASE("rational function canonical form") {
    RationalFn f(P({2, 2}), P({0, 4, 4}));  // (2s+2)/(4s^2+4s) = 1/(2s)
    CHECK(f.den().leading() == 1);
    CHECK(f == RationalFn(P({1}), P({0, 2})));
    CHECK(f.num() == P({1, 0}) * RationalPoly(Rational(1, 2)));

    CHECK_THROWS_AS(RationalFn(P({1}), RationalPoly{}), std::domain_error);
}

TEST_CASE("rendering of polynomials and transforms") {
    CHECK(format_poly(P({1, 2, 1})) == "s^2+2s+1");
    CHECK(format_poly(P({0, 2})) == "2s");
    CHECK(format_ratfn(RationalFn(P({0, 2}), P({1, 2, 1}))) == "2s/(s+1)^2");
    CHECK(format_ratfn(RationalFn(P({1}), P({2, 2, 1}))) == "1/(s^2+2s+2)");
    CHECK(format_poly(RationalPoly{}) == "0");
}

TEST_SUITE_END();
