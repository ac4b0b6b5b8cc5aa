#pragma once

#include "lapinit/scalar.hpp"

#include <utility>
#include <vector>

namespace lapinit {

/// Dense univariate polynomial, coefficients stored lowest degree first and
/// trimmed so the leading coefficient of a nonzero polynomial is nonzero.
/// K is one of Rational, GaussianRational, double, std::complex<double>.
template <class K>
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(K constant) {
        if (!scalar_is_zero(constant)) coeffs_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial variable() { return Polynomial(std::vector<K>{K(0), K(1)}); }
    static Polynomial monomial(K c, int power) {
        std::vector<K> v(power + 1, K(0));
        v[power] = std::move(c);
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<K>& coeffs() const { return coeffs_; }

    K coeff(int power) const {
        if (power < 0 || power >= static_cast<int>(coeffs_.size())) return K(0);
        return coeffs_[power];
    }
    const K& leading() const { return coeffs_.back(); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> out(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<K> out(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<K> out = a.coeffs_;
        for (auto& c : out) c = -c;
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> out(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const K& s, const Polynomial& a) {
        std::vector<K> out = a.coeffs_;
        for (auto& c : out) c = s * c;
        return Polynomial(std::move(out));
    }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg d.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& n, const Polynomial& d) {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        if (n.degree() < d.degree()) return {{}, n};
        std::vector<K> rem = n.coeffs_;
        std::vector<K> quot(n.degree() - d.degree() + 1, K(0));
        for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
            K factor = rem[k + d.degree()] / d.leading();
            quot[k] = factor;
            for (int j = 0; j < d.degree(); ++j) rem[k + j] -= factor * d.coeffs_[j];
            rem[k + d.degree()] = K(0);
        }
        rem.resize(d.degree());
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<K> out(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = K(static_cast<int>(i)) * coeffs_[i];
        return Polynomial(std::move(out));
    }

    /// p(x + c), the Taylor shift used for local expansions around a pole.
    Polynomial shifted(const K& c) const {
        Polynomial result;
        Polynomial lin(std::vector<K>{c, K(1)});
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * lin + Polynomial(*it);
        return result;
    }

    template <class U>
    U eval(const U& x) const {
        U acc = U(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + scalar_cast<U>(*it);
        return acc;
    }

    template <class U>
    Polynomial<U> cast() const {
        std::vector<U> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(scalar_cast<U>(c));
        return Polynomial<U>(std::move(out));
    }

    Polynomial pow(int e) const {
        Polynomial r(K(1)), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        K inv = K(1) / leading();
        return inv * *this;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && scalar_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

using RationalPoly = Polynomial<Rational>;
using GaussianPoly = Polynomial<GaussianRational>;
using DoublePoly = Polynomial<double>;
using ComplexPoly = Polynomial<std::complex<double>>;

/// Monic gcd over an exact coefficient field.
template <class K>
    requires is_exact_scalar<K>::value
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        a = divmod(a, b).second;
        std::swap(a, b);
        if (!b.is_zero()) b = b.monic();
    }
    return a.is_zero() ? a : a.monic();
}

template <class K>
Polynomial<K> poly_from_roots(const std::vector<K>& roots) {
    Polynomial<K> p(K(1));
    for (const auto& r : roots) p *= Polynomial<K>(std::vector<K>{-r, K(1)});
    return p;
}

}  // namespace lapinit
