#include "lapinit/system.hpp"

#include <stdexcept>
#include <string>

namespace lapinit {

SysSpec SysSpec::create(std::vector<Rational> a_coeffs, std::vector<Rational> b_coeffs,
                        std::vector<Rational> pre_initial, GenSignal in) {
    if (a_coeffs.empty()) throw std::invalid_argument("output coefficient list a must be nonempty");
    if (b_coeffs.empty()) throw std::invalid_argument("input coefficient list b must be nonempty");
    if (a_coeffs[0] == 0) throw std::invalid_argument("leading coefficient a0 must be nonzero");

    SysSpec sys;
    sys.n = static_cast<int>(a_coeffs.size()) - 1;
    sys.m = static_cast<int>(b_coeffs.size()) - 1;
    if (sys.m > sys.n)
        throw std::invalid_argument("n >= m violated: input order " + std::to_string(sys.m) +
                                    " exceeds output order " + std::to_string(sys.n));
    if (static_cast<int>(pre_initial.size()) != sys.n)
        throw std::invalid_argument("expected " + std::to_string(sys.n) +
                                    " pre-initial values, got " + std::to_string(pre_initial.size()));
    if (in.singular.max_order() > sys.m)
        throw std::invalid_argument("singular order " + std::to_string(in.singular.max_order()) +
                                    " exceeds input order m=" + std::to_string(sys.m));

    sys.a_original = a_coeffs;
    sys.b_original = b_coeffs;
    Rational inv = 1 / a_coeffs[0];
    sys.a = std::move(a_coeffs);
    sys.b = std::move(b_coeffs);
    for (auto& c : sys.a) c *= inv;
    for (auto& c : sys.b) c *= inv;
    sys.y_pre = std::move(pre_initial);
    sys.input.regular = reg_canonical(std::move(in.regular));
    sys.input.singular = std::move(in.singular);
    return sys;
}

Decomposition decompose(const SysSpec& sys) {
    Decomposition d{sys, sys};
    d.singular.input.regular = RegSig{};
    d.regular.input.singular = SingDist{};
    return d;
}

}  // namespace lapinit
