#pragma once

#include "lapinit/poly.hpp"

#include <complex>
#include <vector>

namespace lapinit {

/// Roots of a polynomial with multiplicities. Total multiplicity equals the
/// degree of the source polynomial; for real-coefficient inputs complex roots
/// come in conjugate pairs.
struct RootSet {
    struct Entry {
        std::complex<double> value;
        int multiplicity = 1;
    };
    std::vector<Entry> roots;

    int total_multiplicity() const {
        int t = 0;
        for (const auto& r : roots) t += r.multiplicity;
        return t;
    }
};

/// All complex roots of p. The multiplicity structure is recovered through an
/// exact square-free decomposition, each square-free factor is solved by
/// Aberth-Ehrlich iteration, and roots closer than 1e-7*(1+|z|) are merged
/// into a single root at the cluster centroid with summed multiplicity.
RootSet poly_roots(const RationalPoly& p);

/// Double-coefficient entry point; coefficients are lifted to exact rationals
/// through their shortest round-tripping decimal before the same pipeline.
RootSet poly_roots(const DoublePoly& p);

/// Aberth-Ehrlich on a square-free polynomial (all simple roots).
std::vector<std::complex<double>> aberth_roots(const ComplexPoly& p);

/// Square-free decomposition: returns f[i] such that p = lead * prod f[i]^(i+1)
/// with each f[i] monic and square-free.
std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p);

}  // namespace lapinit
