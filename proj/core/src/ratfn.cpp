#include "lapinit/ratfn.hpp"

namespace lapinit {

std::complex<double> ratfn_eval(const RationalFn& f, std::complex<double> s0) {
    std::complex<double> dv = f.den().template cast<std::complex<double>>().eval(s0);
    double scale = 0.0;
    double p = 1.0;
    for (const Rational& c : f.den().coeffs()) {
        scale += std::abs(to_double(c)) * p;
        p *= std::max(1.0, std::abs(s0));
    }
    if (std::abs(dv) <= 1e-12 * std::max(scale, 1.0))
        throw std::domain_error("evaluation at a pole of the rational function");
    std::complex<double> nv = f.num().template cast<std::complex<double>>().eval(s0);
    return nv / dv;
}

}  // namespace lapinit
