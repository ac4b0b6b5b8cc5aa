#pragma once

#include "lapinit/ratfn.hpp"

#include <vector>

namespace lapinit {

/// Finite impulse train sum c_k * delta^(k)(t) supported at the origin.
/// Trailing zeros are trimmed; an empty list is the zero distribution.
struct SingDist {
    std::vector<Rational> delta_coeffs;

    SingDist() = default;
    explicit SingDist(std::vector<Rational> coeffs) : delta_coeffs(std::move(coeffs)) { trim(); }

    bool is_zero() const { return delta_coeffs.empty(); }
    int max_order() const { return static_cast<int>(delta_coeffs.size()) - 1; }
    Rational coeff(int order) const {
        if (order < 0 || order > max_order()) return 0;
        return delta_coeffs[order];
    }

    friend SingDist operator+(const SingDist& a, const SingDist& b) {
        std::vector<Rational> out(std::max(a.delta_coeffs.size(), b.delta_coeffs.size()), Rational(0));
        for (size_t i = 0; i < a.delta_coeffs.size(); ++i) out[i] = a.delta_coeffs[i];
        for (size_t i = 0; i < b.delta_coeffs.size(); ++i) out[i] += b.delta_coeffs[i];
        return SingDist(std::move(out));
    }
    friend SingDist operator-(const SingDist& a, const SingDist& b) { return a + (Rational(-1) * b); }
    friend SingDist operator*(const Rational& s, const SingDist& a) {
        std::vector<Rational> out = a.delta_coeffs;
        for (auto& c : out) c *= s;
        return SingDist(std::move(out));
    }
    friend bool operator==(const SingDist& a, const SingDist& b) {
        return a.delta_coeffs == b.delta_coeffs;
    }

    void trim() {
        while (!delta_coeffs.empty() && delta_coeffs.back() == 0) delta_coeffs.pop_back();
    }
};

/// Distributional derivative of order k: delta^(p) -> delta^(p+k).
SingDist sing_derivative(const SingDist& d, int k);

/// Integral over [0, inf): only the delta^(0) coefficient survives.
Rational sing_integral_total(const SingDist& d);

/// One term coeff * t^power * e^(rate*t) on t >= 0.
struct RegAtom {
    GaussianRational coeff;
    int power = 0;
    GaussianRational rate;
};

/// Piecewise-smooth signal: a finite sum of exp-poly atoms on t >= 0 plus a
/// constant baseline on t < 0. Complex atoms occur in conjugate pairs so the
/// signal is real-valued; canonical() enforces this.
struct RegSig {
    std::vector<RegAtom> atoms;
    Rational pre_value = 0;

    bool is_zero() const { return atoms.empty(); }

    static RegSig constant(Rational value, Rational pre = 0);
    static RegSig atom(GaussianRational coeff, int power, GaussianRational rate, Rational pre = 0);
};

/// Merges atoms with identical (power, rate), drops zero coefficients, sorts,
/// and verifies complex atoms pair with their conjugates.
RegSig reg_canonical(RegSig g);

RegSig reg_add(const RegSig& a, const RegSig& b);
RegSig reg_scale(const Rational& s, const RegSig& g);

/// Pointwise value at t >= 0; imaginary residue above 1e-9*(1+|value|) signals
/// broken conjugate pairing and throws.
double reg_eval(const RegSig& g, double t);

/// Term-wise classical derivative on t > 0 (the baseline differentiates to 0).
RegSig reg_derivative(const RegSig& g);

/// Exact k-th derivative of the atom sum at t = 0 (one-sided, from the right).
Rational reg_derivative_at_zero_plus(const RegSig& g, int k);

/// Right-sided transform: atom c*t^p*e^(rate t) maps to c*p!/(s-rate)^(p+1),
/// combined over a common denominator. Exact for rational and Gaussian
/// rational data; the result must be real and is returned over the rationals.
RationalFn reg_laplace(const RegSig& g);

struct GenSignal {
    RegSig regular;
    SingDist singular;
};

}  // namespace lapinit
