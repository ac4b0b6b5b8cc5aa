#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lapinit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

/// Parses "p/q", integers, plain decimals and scientific notation into an
/// exact rational. Decimals are taken at face value: "0.1" becomes 1/10.
Rational parse_rational(std::string_view text);

/// Exact rational carrying the shortest decimal that round-trips to `x`.
Rational rational_from_double(double x);

/// Continued-fraction reconstruction of a nearby small-denominator rational.
/// Returns nothing when no candidate with denominator <= max_denominator lies
/// within tol*(1+|x|).
std::optional<Rational> rational_reconstruct(double x, long long max_denominator = 1000000,
                                             double tol = 1e-9);

std::string format_rational(const Rational& x);

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(int r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

std::string format_gaussian(const GaussianRational& z);

// Scalar glue used by the templated polynomial layer.

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool scalar_is_zero(double x) { return x == 0.0; }
inline bool scalar_is_zero(const std::complex<double>& x) { return x == std::complex<double>{}; }

template <class K> struct is_exact_scalar : std::false_type {};
template <> struct is_exact_scalar<Rational> : std::true_type {};
template <> struct is_exact_scalar<GaussianRational> : std::true_type {};

template <class To> struct ScalarCast;

template <> struct ScalarCast<Rational> {
    static Rational from(const Rational& x) { return x; }
};
template <> struct ScalarCast<GaussianRational> {
    static GaussianRational from(const Rational& x) { return {x}; }
    static GaussianRational from(const GaussianRational& x) { return x; }
};
template <> struct ScalarCast<double> {
    static double from(const Rational& x) { return to_double(x); }
    static double from(double x) { return x; }
};
template <> struct ScalarCast<std::complex<double>> {
    static std::complex<double> from(const Rational& x) { return {to_double(x), 0.0}; }
    static std::complex<double> from(const GaussianRational& x) { return x.to_complex(); }
    static std::complex<double> from(double x) { return {x, 0.0}; }
    static std::complex<double> from(const std::complex<double>& x) { return x; }
};

template <class To, class From> To scalar_cast(const From& x) { return ScalarCast<To>::from(x); }

Rational rational_pow(const Rational& base, int exponent);
Rational factorial(int n);

/// Formats with 12 significant digits, the display precision for inexact data.
std::string format_double(double x);

}  // namespace lapinit
