#include "lapinit/partial_fractions.hpp"

#include <cmath>
#include <optional>

namespace lapinit {

namespace {

struct ExactPole {
    GaussianRational value;
    int multiplicity;
};

std::optional<GaussianRational> rationalize_root(std::complex<double> z) {
    auto re = rational_reconstruct(z.real());
    auto im = rational_reconstruct(z.imag());
    if (!re || !im) return std::nullopt;
    return GaussianRational{*re, *im};
}

// Verifies candidates by exact trial division; returns the poles only if the
// whole denominator factors over the Gaussian rationals.
std::optional<std::vector<ExactPole>> exact_pole_set(const RationalPoly& den, const RootSet& roots) {
    GaussianPoly rest = den.cast<GaussianRational>().monic();
    std::vector<ExactPole> poles;
    for (const auto& entry : roots.roots) {
        auto cand = rationalize_root(entry.value);
        if (!cand) return std::nullopt;
        GaussianPoly lin(std::vector<GaussianRational>{-*cand, GaussianRational(1)});
        for (int k = 0; k < entry.multiplicity; ++k) {
            auto [q, r] = divmod(rest, lin);
            if (!r.is_zero()) return std::nullopt;
            rest = std::move(q);
        }
        poles.push_back({*cand, entry.multiplicity});
    }
    if (rest.degree() != 0) return std::nullopt;
    return poles;
}

// Taylor coefficients of num/den around 0 up to order `count-1`; den(0) != 0.
template <class K>
std::vector<K> series_quotient(const Polynomial<K>& num, const Polynomial<K>& den, int count) {
    std::vector<K> g(count, K(0));
    K inv0 = K(1) / den.coeff(0);
    for (int i = 0; i < count; ++i) {
        K acc = num.coeff(i);
        for (int j = 1; j <= i; ++j) acc -= den.coeff(j) * g[i - j];
        g[i] = acc * inv0;
    }
    return g;
}

std::vector<PartialFractionTerm> exact_terms(const RationalPoly& num, const RationalPoly& den,
                                             const std::vector<ExactPole>& poles) {
    GaussianPoly gnum = num.cast<GaussianRational>();
    GaussianPoly gden = den.cast<GaussianRational>().monic();
    std::vector<PartialFractionTerm> terms;
    for (const auto& pole : poles) {
        GaussianPoly lin(std::vector<GaussianRational>{-pole.value, GaussianRational(1)});
        GaussianPoly deflated = gden;
        for (int k = 0; k < pole.multiplicity; ++k) deflated = divmod(deflated, lin).first;
        GaussianPoly num_local = gnum.shifted(pole.value);
        GaussianPoly den_local = deflated.shifted(pole.value);
        auto taylor = series_quotient(num_local, den_local, pole.multiplicity);
        for (int i = 0; i < pole.multiplicity; ++i) {
            if (taylor[i].is_zero()) continue;
            terms.push_back({pole.value, pole.multiplicity - i, taylor[i]});
        }
    }
    return terms;
}

// Approximate poles lifted to exact carriers. The residue algebra then runs
// exactly at the rounded locations, so near-coincident poles with huge
// cancelling residues do not lose precision beyond the root error itself.
std::vector<ExactPole> lifted_pole_set(const RootSet& roots) {
    std::vector<ExactPole> poles;
    for (const auto& entry : roots.roots) {
        GaussianRational value{rational_from_double(entry.value.real()),
                               rational_from_double(entry.value.imag())};
        poles.push_back({value, entry.multiplicity});
    }
    return poles;
}

}  // namespace

std::complex<double> PartialFractionForm::eval(std::complex<double> s) const {
    std::complex<double> acc = polynomial_part.eval(s);
    for (const auto& t : terms) {
        std::complex<double> d = s - t.pole.to_complex();
        acc += t.residue.to_complex() / std::pow(d, t.order);
    }
    return acc;
}

PartialFractionForm partial_fractions(const RationalFn& f) {
    PartialFractionForm out;
    auto [poly_part, proper] = f.split_polynomial();
    out.polynomial_part = std::move(poly_part);
    if (proper.is_zero()) return out;

    const RationalPoly& den = proper.den();
    RootSet roots = poly_roots(den);

    if (auto poles = exact_pole_set(den, roots)) {
        out.exact = true;
        out.terms = exact_terms(proper.num(), den, *poles);
    } else {
        out.exact = false;
        out.terms = exact_terms(proper.num(), den, lifted_pole_set(roots));
    }
    return out;
}

}  // namespace lapinit
