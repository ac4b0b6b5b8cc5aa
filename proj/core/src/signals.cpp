#include "lapinit/signals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace lapinit {

SingDist sing_derivative(const SingDist& d, int k) {
    if (k < 0) throw std::invalid_argument("derivative order must be nonnegative");
    if (d.is_zero() || k == 0) return k == 0 ? d : SingDist{};
    std::vector<Rational> out(d.delta_coeffs.size() + k, Rational(0));
    for (size_t i = 0; i < d.delta_coeffs.size(); ++i) out[i + k] = d.delta_coeffs[i];
    return SingDist(std::move(out));
}

Rational sing_integral_total(const SingDist& d) { return d.coeff(0); }

RegSig RegSig::constant(Rational value, Rational pre) {
    RegSig g;
    g.pre_value = std::move(pre);
    if (value != 0) g.atoms.push_back({GaussianRational(std::move(value)), 0, GaussianRational(0)});
    return g;
}

RegSig RegSig::atom(GaussianRational coeff, int power, GaussianRational rate, Rational pre) {
    RegSig g;
    g.pre_value = std::move(pre);
    g.atoms.push_back({std::move(coeff), power, std::move(rate)});
    return reg_canonical(std::move(g));
}

namespace {

using AtomKey = std::pair<std::pair<Rational, Rational>, int>;  // ((rate re, rate im), power)

AtomKey key_of(const RegAtom& a) { return {{a.rate.re, a.rate.im}, a.power}; }

}  // namespace

RegSig reg_canonical(RegSig g) {
    std::map<AtomKey, GaussianRational> merged;
    for (auto& a : g.atoms) merged[key_of(a)] += a.coeff;

    RegSig out;
    out.pre_value = std::move(g.pre_value);
    for (auto& [key, coeff] : merged) {
        if (coeff.is_zero()) continue;
        out.atoms.push_back({coeff, key.second, GaussianRational{key.first.first, key.first.second}});
    }
    for (const auto& a : out.atoms) {
        if (a.rate.is_real() && a.coeff.is_real()) continue;
        auto mate = merged.find({{a.rate.re, -a.rate.im}, a.power});
        if (mate == merged.end() || mate->second != conj(a.coeff))
            throw std::logic_error("complex atoms must come in conjugate pairs");
    }
    return out;
}

RegSig reg_add(const RegSig& a, const RegSig& b) {
    RegSig out;
    out.pre_value = a.pre_value + b.pre_value;
    out.atoms = a.atoms;
    out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
    return reg_canonical(std::move(out));
}

RegSig reg_scale(const Rational& s, const RegSig& g) {
    RegSig out;
    out.pre_value = s * g.pre_value;
    out.atoms = g.atoms;
    for (auto& a : out.atoms) a.coeff = GaussianRational(s) * a.coeff;
    return reg_canonical(std::move(out));
}

double reg_eval(const RegSig& g, double t) {
    if (t < 0) throw std::invalid_argument("reg_eval is defined on t >= 0");
    std::complex<double> acc = 0.0;
    for (const auto& a : g.atoms) {
        std::complex<double> v = a.coeff.to_complex();
        for (int p = 0; p < a.power; ++p) v *= t;
        acc += v * std::exp(a.rate.to_complex() * t);
    }
    if (std::abs(acc.imag()) > 1e-9 * (1.0 + std::abs(acc.real())))
        throw std::logic_error("signal evaluation left a non-negligible imaginary part");
    return acc.real();
}

RegSig reg_derivative(const RegSig& g) {
    RegSig out;
    out.pre_value = 0;
    for (const auto& a : g.atoms) {
        if (a.power > 0)
            out.atoms.push_back({GaussianRational(Rational(a.power)) * a.coeff, a.power - 1, a.rate});
        if (!a.rate.is_zero()) out.atoms.push_back({a.rate * a.coeff, a.power, a.rate});
    }
    return reg_canonical(std::move(out));
}

Rational reg_derivative_at_zero_plus(const RegSig& g, int k) {
    // (t^p e^(rt))^(k) at 0 keeps only the j = p term of the Leibniz sum:
    // k!/(k-p)! * r^(k-p).
    GaussianRational acc(0);
    for (const auto& a : g.atoms) {
        if (a.power > k) continue;
        Rational fall = factorial(k) / factorial(k - a.power);
        GaussianRational rate_pow(1);
        for (int i = 0; i < k - a.power; ++i) rate_pow *= a.rate;
        acc += GaussianRational(fall) * a.coeff * rate_pow;
    }
    if (acc.im != 0) throw std::logic_error("derivative at 0+ of a real signal must be real");
    return acc.re;
}

RationalFn reg_laplace(const RegSig& g) {
    if (g.atoms.empty()) return RationalFn{};

    // Group atoms by rate; denominator is prod (s - rate)^(max power + 1).
    struct Group {
        GaussianRational rate;
        int exponent = 0;
        std::vector<const RegAtom*> atoms;
    };
    std::vector<Group> groups;
    for (const auto& a : g.atoms) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const Group& grp) { return grp.rate == a.rate; });
        if (it == groups.end()) {
            groups.push_back({a.rate, a.power + 1, {&a}});
        } else {
            it->exponent = std::max(it->exponent, a.power + 1);
            it->atoms.push_back(&a);
        }
    }

    GaussianPoly den(GaussianRational(1));
    for (const auto& grp : groups) {
        GaussianPoly lin(std::vector<GaussianRational>{-grp.rate, GaussianRational(1)});
        den *= lin.pow(grp.exponent);
    }

    GaussianPoly num;
    for (const auto& grp : groups) {
        GaussianPoly lin(std::vector<GaussianRational>{-grp.rate, GaussianRational(1)});
        for (const RegAtom* a : grp.atoms) {
            // c * p! * den / (s - rate)^(p+1)
            GaussianPoly cof = divmod(den, lin.pow(a->power + 1)).first;
            num += GaussianRational(factorial(a->power)) * a->coeff * cof;
        }
    }

    // Reduce by the known linear factors of the denominator.
    for (const auto& grp : groups) {
        GaussianPoly lin(std::vector<GaussianRational>{-grp.rate, GaussianRational(1)});
        while (!num.is_zero()) {
            auto [q, r] = divmod(num, lin);
            if (!r.is_zero()) break;
            auto [dq, dr] = divmod(den, lin);
            if (!dr.is_zero()) break;
            num = std::move(q);
            den = std::move(dq);
        }
    }

    std::vector<Rational> real_num, real_den;
    for (const auto& c : num.coeffs()) {
        if (c.im != 0) throw std::logic_error("transform of a real signal must have real coefficients");
        real_num.push_back(c.re);
    }
    for (const auto& c : den.coeffs()) {
        if (c.im != 0) throw std::logic_error("transform of a real signal must have real coefficients");
        real_den.push_back(c.re);
    }
    return RationalFn(RationalPoly(std::move(real_num)), RationalPoly(std::move(real_den)),
                      RationalFn::already_reduced_t{});
}

}  // namespace lapinit
