#include "lapinit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lapinit {

namespace {

constexpr double kClusterTol = 1e-7;

std::complex<double> horner(const ComplexPoly& p, std::complex<double> x) { return p.eval(x); }

std::vector<std::complex<double>> initial_guesses(const ComplexPoly& p) {
    const int d = p.degree();
    double radius = 0.0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(p.coeff(i) / p.leading()));
    radius = 1.0 + radius;
    std::vector<std::complex<double>> z(d);
    for (int k = 0; k < d; ++k) {
        double angle = 2.0 * std::numbers::pi * (k + 0.25) / d + 0.3;
        z[k] = radius * std::polar(1.0, angle);
    }
    return z;
}

void newton_polish(const ComplexPoly& p, const ComplexPoly& dp, std::complex<double>& z) {
    for (int i = 0; i < 3; ++i) {
        std::complex<double> d = horner(dp, z);
        if (std::abs(d) == 0.0) return;
        z -= horner(p, z) / d;
    }
}

struct Cluster {
    std::complex<double> weighted_sum;
    int multiplicity = 0;
    std::complex<double> centroid() const { return weighted_sum / static_cast<double>(multiplicity); }
};

}  // namespace

std::vector<std::complex<double>> aberth_roots(const ComplexPoly& p_in) {
    ComplexPoly p = p_in.monic();
    const int d = p.degree();
    if (d <= 0) return {};
    if (d == 1) return {-p.coeff(0)};

    ComplexPoly dp = p.derivative();
    auto z = initial_guesses(p);
    for (int iter = 0; iter < 300; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < d; ++k) {
            std::complex<double> pv = horner(p, z[k]);
            std::complex<double> dv = horner(dp, z[k]);
            if (std::abs(dv) == 0.0) {
                z[k] += 1e-8 * (1.0 + std::abs(z[k]));
                worst = 1.0;
                continue;
            }
            std::complex<double> newton = pv / dv;
            std::complex<double> s{0.0, 0.0};
            for (int j = 0; j < d; ++j)
                if (j != k) s += 1.0 / (z[k] - z[j]);
            std::complex<double> denom = 1.0 - newton * s;
            std::complex<double> w = std::abs(denom) > 1e-300 ? newton / denom : newton;
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[k])));
        }
        if (worst < 1e-14) break;
    }
    for (auto& root : z) newton_polish(p, dp, root);
    return z;
}

std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p) {
    // Yun's algorithm over the rationals.
    std::vector<RationalPoly> factors;
    RationalPoly a = p.monic();
    if (a.degree() < 1) return factors;
    RationalPoly da = a.derivative();
    RationalPoly g = poly_gcd(a, da);
    RationalPoly b = divmod(a, g).first;
    RationalPoly c = divmod(da, g).first;
    RationalPoly d = c - b.derivative();
    while (true) {
        RationalPoly f = poly_gcd(b, d);
        factors.push_back(f.is_zero() ? RationalPoly(Rational(1)) : f.monic());
        RationalPoly b_next = divmod(b, factors.back()).first;
        if (b_next.degree() < 1) break;
        RationalPoly c_next = divmod(d, factors.back()).first;
        b = b_next;
        d = c_next - b.derivative();
    }
    return factors;
}

namespace {

RootSet roots_from_rational(const RationalPoly& p) {
    if (p.is_zero()) throw std::domain_error("root finding requires a nonzero polynomial");
    if (p.degree() < 1) throw std::domain_error("root finding requires degree >= 1");

    auto factors = squarefree_decomposition(p);

    struct RawRoot {
        std::complex<double> value;
        int multiplicity;
    };
    std::vector<RawRoot> raw;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        auto zs = aberth_roots(factors[i].cast<std::complex<double>>());
        for (auto z : zs) raw.push_back({z, static_cast<int>(i) + 1});
    }

    // Merge near-coincident roots (e.g. clusters from a perturbed multiple root).
    std::vector<Cluster> clusters;
    for (const auto& r : raw) {
        bool merged = false;
        for (auto& c : clusters) {
            std::complex<double> ctr = c.centroid();
            double tol = kClusterTol * (1.0 + std::max(std::abs(ctr), std::abs(r.value)));
            if (std::abs(ctr - r.value) <= tol) {
                c.weighted_sum += r.value * static_cast<double>(r.multiplicity);
                c.multiplicity += r.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) clusters.push_back({r.value * static_cast<double>(r.multiplicity), r.multiplicity});
    }

    // Conjugate symmetry: the input has real coefficients, so pair roots with
    // their mirror images and snap near-real roots onto the axis.
    std::vector<RootSet::Entry> entries;
    std::vector<bool> used(clusters.size(), false);
    for (size_t i = 0; i < clusters.size(); ++i) {
        if (used[i]) continue;
        std::complex<double> zi = clusters[i].centroid();
        double imag_tol = kClusterTol * (1.0 + std::abs(zi));
        if (std::abs(zi.imag()) <= imag_tol) {
            entries.push_back({{zi.real(), 0.0}, clusters[i].multiplicity});
            used[i] = true;
            continue;
        }
        size_t mate = i;
        double best = std::numeric_limits<double>::max();
        for (size_t j = i + 1; j < clusters.size(); ++j) {
            if (used[j] || clusters[j].multiplicity != clusters[i].multiplicity) continue;
            double dist = std::abs(std::conj(zi) - clusters[j].centroid());
            if (dist < best) {
                best = dist;
                mate = j;
            }
        }
        if (mate != i && best <= kClusterTol * (1.0 + std::abs(zi)) * 10.0) {
            std::complex<double> zj = clusters[mate].centroid();
            double re = 0.5 * (zi.real() + zj.real());
            double im = 0.5 * (std::abs(zi.imag()) + std::abs(zj.imag()));
            bool i_upper = zi.imag() > 0;
            entries.push_back({{re, i_upper ? im : -im}, clusters[i].multiplicity});
            entries.push_back({{re, i_upper ? -im : im}, clusters[i].multiplicity});
            used[i] = used[mate] = true;
        } else {
            entries.push_back({zi, clusters[i].multiplicity});
            used[i] = true;
        }
    }

    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });

    RootSet out{std::move(entries)};
    if (out.total_multiplicity() != p.degree())
        throw std::runtime_error("root multiplicities do not sum to the degree");
    return out;
}

}  // namespace

RootSet poly_roots(const RationalPoly& p) { return roots_from_rational(p); }

RootSet poly_roots(const DoublePoly& p) {
    std::vector<Rational> lifted;
    lifted.reserve(p.coeffs().size());
    for (double c : p.coeffs()) lifted.push_back(rational_from_double(c));
    return roots_from_rational(RationalPoly(std::move(lifted)));
}

}  // namespace lapinit
