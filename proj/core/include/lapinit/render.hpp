#pragma once

#include "lapinit/solve.hpp"

#include <optional>
#include <string>

namespace lapinit {

/// Compact polynomial rendering, highest power first: "2s^2-3s+1/2".
std::string format_poly(const RationalPoly& p, const std::string& var = "s");

/// "2s/(s+1)^2" when the denominator factors exactly over the rationals
/// (conjugate pairs collapse into real quadratics), otherwise "num/(den)".
std::string format_ratfn(const RationalFn& f, const std::string& var = "s");

/// Closed-form signal rendering with conjugate pairs collapsed:
/// "2 e^{-1 t} - 2 t e^{-1 t}", "e^{-1 t} (2 cos(3 t) + 4 sin(3 t))".
/// With exact_data false the values print as 12-digit decimals instead of
/// the exact fractions carrying them.
std::string format_regsig(const RegSig& g, bool exact_data = true);

/// Impulse train rendering: "2 delta(t) - delta'(t)".
std::string format_singdist(const SingDist& d);

/// "y", "y'", "y''", then "y^(k)".
std::string derivative_label(int order);

/// Exact linear factorization of a real polynomial over the Gaussian
/// rationals, if its numerically located roots verify exactly.
std::optional<std::vector<std::pair<GaussianRational, int>>> exact_linear_factorization(
    const RationalPoly& p);

}  // namespace lapinit
