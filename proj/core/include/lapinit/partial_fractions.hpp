#pragma once

#include "lapinit/ratfn.hpp"
#include "lapinit/roots.hpp"

namespace lapinit {

/// One pole term residue/(s - pole)^order. Pole and residue are stored as
/// Gaussian rationals; when `PartialFractionForm::exact` is false they are
/// merely exact carriers of double-precision values.
struct PartialFractionTerm {
    GaussianRational pole;
    int order = 1;
    GaussianRational residue;
};

struct PartialFractionForm {
    std::vector<PartialFractionTerm> terms;
    RationalPoly polynomial_part;
    bool exact = true;

    /// Recombines terms and polynomial part at a (non-pole) evaluation point.
    std::complex<double> eval(std::complex<double> s) const;
};

/// Expansion of f into polynomial part plus pole terms. Denominator roots are
/// located numerically; when every root is recognized as an exact (Gaussian)
/// rational dividing the denominator, residues are computed exactly and the
/// form recombines to f as an identity. Otherwise residues are computed in
/// double precision (exact == false).
PartialFractionForm partial_fractions(const RationalFn& f);

}  // namespace lapinit
