#include "lapinit/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace lapinit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// cpp_int's string constructor treats a leading 0 as an octal prefix.
std::string strip_leading_zeros(std::string_view s) {
    size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return std::string(s.substr(i));
}

BigInt parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    BigInt v{strip_leading_zeros(s)};
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty number");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(s.substr(0, slash));
        BigInt den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }

    long long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6)
            throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
        for (char c : es) exp10 = exp10 * 10 + (c - '0');
        if (eneg) exp10 = -exp10;
        s = s.substr(0, e);
    }

    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw std::invalid_argument("bad number '" + std::string(text) + "'");
        if (!ip.empty() && !all_digits(ip)) throw std::invalid_argument("bad number '" + std::string(text) + "'");
        if (!fp.empty() && !all_digits(fp)) throw std::invalid_argument("bad number '" + std::string(text) + "'");
        digits = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long long>(fp.size());
    } else {
        if (!all_digits(s)) throw std::invalid_argument("bad number '" + std::string(text) + "'");
        digits = std::string(s);
    }
    if (digits.empty()) digits = "0";

    BigInt mant{strip_leading_zeros(digits)};
    if (neg) mant = -mant;
    BigInt num = mant, den = 1;
    BigInt ten = 10;
    for (long long i = 0; i < exp10; ++i) num *= ten;
    for (long long i = 0; i < -exp10; ++i) den *= ten;
    return Rational(num, den);
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return parse_rational(std::string_view(buf, res.ptr - buf));
}

std::optional<Rational> rational_reconstruct(double x, long long max_denominator, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    const double bound = tol * (1.0 + std::fabs(x));

    double v = x;
    long long p_prev = 1, q_prev = 0;
    long long p = static_cast<long long>(std::floor(v)), q = 1;
    v -= std::floor(v);
    for (int iter = 0; iter < 48; ++iter) {
        if (std::fabs(x - static_cast<double>(p) / static_cast<double>(q)) <= bound)
            return Rational(BigInt(p), BigInt(q));
        if (v < 1e-15) break;
        v = 1.0 / v;
        double a_f = std::floor(v);
        if (a_f > 9e17) break;
        long long a = static_cast<long long>(a_f);
        v -= a_f;
        long long p_next = a * p + p_prev;
        long long q_next = a * q + q_prev;
        if (q_next > max_denominator || q_next <= 0) break;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    if (std::fabs(x - static_cast<double>(p) / static_cast<double>(q)) <= bound)
        return Rational(BigInt(p), BigInt(q));
    return std::nullopt;
}

std::string format_rational(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

std::string format_gaussian(const GaussianRational& z) {
    if (z.im == 0) return format_rational(z.re);
    std::string s;
    if (z.re != 0) s = format_rational(z.re);
    if (z.im > 0 && !s.empty()) s += "+";
    if (z.im == -1)
        s += "-";
    else if (z.im != 1)
        s += format_rational(z.im);
    s += "i";
    return s;
}

Rational rational_pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return 1 / rational_pow(base, -exponent);
    }
    Rational r = 1, b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace lapinit
