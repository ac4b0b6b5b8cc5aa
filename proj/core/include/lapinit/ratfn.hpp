#pragma once

#include "lapinit/poly.hpp"

#include <cmath>

namespace lapinit {

/// Rational function num/den in the transform variable. Canonical form: den is
/// monic and, for exact scalars, num and den are coprime. Equality of
/// canonical forms is therefore structural equality.
template <class K>
class RatFn {
  public:
    RatFn() : den_(K(1)) {}
    RatFn(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if constexpr (is_exact_scalar<K>::value) {
            Polynomial<K> g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        }
        normalize_monic();
    }
    RatFn(Polynomial<K> num) : num_(std::move(num)), den_(K(1)) {}

    struct already_reduced_t {};
    RatFn(Polynomial<K> num, Polynomial<K> den, already_reduced_t)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        normalize_monic();
    }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_proper() const { return num_.degree() <= den_.degree(); }
    bool is_strictly_proper() const { return num_.degree() < den_.degree(); }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a) { return RatFn(-a.num_, a.den_, already_reduced_t{}); }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFn operator*(const K& s, const RatFn& a) {
        return RatFn(s * a.num_, a.den_);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
    RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
    RatFn& operator*=(const RatFn& b) { return *this = *this * b; }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    /// Splits into (polynomial part, strictly proper part).
    std::pair<Polynomial<K>, RatFn> split_polynomial() const {
        auto [q, r] = divmod(num_, den_);
        return {std::move(q), RatFn(std::move(r), den_, already_reduced_t{})};
    }

    template <class U>
    RatFn<U> cast() const {
        return RatFn<U>(num_.template cast<U>(), den_.template cast<U>(),
                        typename RatFn<U>::already_reduced_t{});
    }

  private:
    void normalize_monic() {
        K lead = den_.leading();
        if (!scalar_is_zero(lead - K(1))) {
            K inv = K(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Polynomial<K> num_;
    Polynomial<K> den_;
};

using RationalFn = RatFn<Rational>;
using GaussianFn = RatFn<GaussianRational>;

/// Evaluates f at s0, refusing points where the denominator (nearly) vanishes.
std::complex<double> ratfn_eval(const RationalFn& f, std::complex<double> s0);

}  // namespace lapinit
