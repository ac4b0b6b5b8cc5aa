#pragma once

#include "lapinit/system.hpp"

#include <random>

namespace lapinit::testing {

/// Random rational in [-5, 5] with small denominator.
inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 4);
    Rational r(num(rng), den(rng));
    if (r > 5) r = 5;
    if (r < -5) r = -5;
    return r;
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
    Rational r = random_rational(rng);
    while (r == 0) r = random_rational(rng);
    return r;
}

/// Random impulse train of order <= max_order with at least one nonzero term.
inline SingDist random_delta_train(std::mt19937& rng, int max_order) {
    std::vector<Rational> coeffs(max_order + 1, Rational(0));
    std::uniform_int_distribution<int> keep(0, 1);
    bool any = false;
    for (auto& c : coeffs) {
        if (keep(rng)) {
            c = random_nonzero_rational(rng);
            any = true;
        }
    }
    if (!any) coeffs[max_order] = random_nonzero_rational(rng);
    return SingDist(std::move(coeffs));
}

/// Random system: n in [1, max_n], m in [0, n], rational coefficients in
/// [-5, 5], impulse-train input of order <= m, random pre-initial values.
inline SysSpec random_system(std::mt19937& rng, int max_n = 5) {
    std::uniform_int_distribution<int> order(1, max_n);
    int n = order(rng);
    std::uniform_int_distribution<int> input_order(0, n);
    int m = input_order(rng);

    std::vector<Rational> a(n + 1), b(m + 1);
    a[0] = random_nonzero_rational(rng);
    for (int i = 1; i <= n; ++i) a[i] = random_rational(rng);
    b[0] = random_nonzero_rational(rng);
    for (int j = 1; j <= m; ++j) b[j] = random_rational(rng);

    std::vector<Rational> pre(n);
    for (auto& p : pre) p = random_rational(rng);

    GenSignal input;
    input.singular = random_delta_train(rng, m);
    return SysSpec::create(std::move(a), std::move(b), std::move(pre), std::move(input));
}

/// Random signal of exp-poly atoms with small rational data, including the
/// occasional conjugate pair; suitable for exact transform round trips.
inline RegSig random_rational_signal(std::mt19937& rng, int max_atoms = 4) {
    std::uniform_int_distribution<int> count(1, max_atoms);
    std::uniform_int_distribution<int> power(0, 2);
    std::uniform_int_distribution<int> rate_num(-3, 3);
    std::uniform_int_distribution<int> rate_den(1, 2);
    std::uniform_int_distribution<int> pair(0, 2);

    RegSig g;
    int atoms = count(rng);
    for (int i = 0; i < atoms; ++i) {
        GaussianRational coeff{random_nonzero_rational(rng)};
        int p = power(rng);
        Rational re(rate_num(rng), rate_den(rng));
        if (pair(rng) == 0) {
            Rational im(std::abs(rate_num(rng)) + 1, 1);
            GaussianRational rate{re, im};
            GaussianRational c{coeff.re, random_rational(rng)};
            g.atoms.push_back({c, p, rate});
            g.atoms.push_back({conj(c), p, conj(rate)});
        } else {
            g.atoms.push_back({coeff, p, GaussianRational{re}});
        }
    }
    g.pre_value = random_rational(rng);
    return reg_canonical(std::move(g));
}

/// Strictly proper transform with a known factored denominator: random real
/// poles, conjugate pairs, and multiplicities. When irrational_poles is set a
/// quadratic with non-rational roots is mixed in to force the float path.
inline RationalFn random_factored_ratfn(std::mt19937& rng, bool irrational_poles = false) {
    std::uniform_int_distribution<int> pole_count(1, 3);
    std::uniform_int_distribution<int> mult(1, 2);
    std::uniform_int_distribution<int> kind(0, 2);

    RationalPoly den(Rational(1));
    int blocks = pole_count(rng);
    for (int i = 0; i < blocks; ++i) {
        int k = mult(rng);
        if (kind(rng) == 0) {
            Rational re = random_rational(rng), im = random_nonzero_rational(rng);
            RationalPoly quad(std::vector<Rational>{re * re + im * im, -2 * re, Rational(1)});
            den *= quad.pow(k);
        } else {
            Rational p = random_rational(rng);
            RationalPoly lin(std::vector<Rational>{-p, Rational(1)});
            den *= lin.pow(k);
        }
    }
    if (irrational_poles) {
        std::uniform_int_distribution<int> shift(2, 7);
        int c = shift(rng);
        // roots +-sqrt(c), irrational for non-square c
        if (c == 4) c = 5;
        den *= RationalPoly(std::vector<Rational>{Rational(-c), Rational(0), Rational(1)});
    }

    std::vector<Rational> num_coeffs(den.degree());
    bool any = false;
    for (auto& c : num_coeffs) {
        c = random_rational(rng);
        if (c != 0) any = true;
    }
    if (!any) num_coeffs[0] = 1;
    return RationalFn(RationalPoly(std::move(num_coeffs)), den);
}

}  // namespace lapinit::testing
