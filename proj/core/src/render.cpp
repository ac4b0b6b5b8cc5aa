#include "lapinit/render.hpp"

#include "lapinit/roots.hpp"

#include <algorithm>
#include <sstream>

namespace lapinit {

namespace {

bool is_simple(const Rational& r) { return denominator(r) == 1; }

std::string coeff_prefix(const Rational& c, bool has_factor) {
    Rational a = c < 0 ? -c : c;
    if (has_factor && a == 1) return "";
    std::string s = format_rational(a);
    if (has_factor && !is_simple(a)) s = "(" + s + ")";
    return s;
}

void append_term(std::string& out, bool negative, const std::string& body) {
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? "-" : "+";
    }
    out += body;
}

std::string power_of_var(const std::string& var, int p) {
    if (p == 0) return "";
    if (p == 1) return var;
    return var + "^" + std::to_string(p);
}

}  // namespace

std::string format_poly(const RationalPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        std::string body = coeff_prefix(c, k > 0) + power_of_var(var, k);
        append_term(out, c < 0, body);
    }
    return out;
}

std::optional<std::vector<std::pair<GaussianRational, int>>> exact_linear_factorization(
    const RationalPoly& p) {
    if (p.degree() < 1) return std::nullopt;
    RootSet roots;
    try {
        roots = poly_roots(p);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    GaussianPoly rest = p.cast<GaussianRational>().monic();
    std::vector<std::pair<GaussianRational, int>> factors;
    for (const auto& entry : roots.roots) {
        auto re = rational_reconstruct(entry.value.real());
        auto im = rational_reconstruct(entry.value.imag());
        if (!re || !im) return std::nullopt;
        GaussianRational root{*re, *im};
        GaussianPoly lin(std::vector<GaussianRational>{-root, GaussianRational(1)});
        for (int k = 0; k < entry.multiplicity; ++k) {
            auto [q, r] = divmod(rest, lin);
            if (!r.is_zero()) return std::nullopt;
            rest = std::move(q);
        }
        factors.push_back({root, entry.multiplicity});
    }
    if (rest.degree() != 0) return std::nullopt;
    return factors;
}

std::string format_ratfn(const RationalFn& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string num = format_poly(f.num(), var);
    if (f.den().degree() == 0) return num;

    std::string den;
    if (auto factors = exact_linear_factorization(f.den())) {
        // Collapse conjugate pairs into real quadratics.
        std::vector<std::pair<RationalPoly, int>> real_factors;
        std::vector<bool> used(factors->size(), false);
        for (size_t i = 0; i < factors->size(); ++i) {
            if (used[i]) continue;
            const auto& [root, mult] = (*factors)[i];
            if (root.is_real()) {
                real_factors.push_back(
                    {RationalPoly(std::vector<Rational>{-root.re, Rational(1)}), mult});
                used[i] = true;
                continue;
            }
            for (size_t j = i + 1; j < factors->size(); ++j) {
                if (!used[j] && (*factors)[j].first == conj(root) && (*factors)[j].second == mult) {
                    used[j] = true;
                    break;
                }
            }
            Rational sum = 2 * root.re;
            Rational prod = root.re * root.re + root.im * root.im;
            real_factors.push_back({RationalPoly(std::vector<Rational>{prod, -sum, Rational(1)}), mult});
            used[i] = true;
        }
        std::sort(real_factors.begin(), real_factors.end(), [](const auto& a, const auto& b) {
            return format_poly(a.first) < format_poly(b.first);
        });
        for (const auto& [factor, mult] : real_factors) {
            den += "(" + format_poly(factor, var) + ")";
            if (mult > 1) den += "^" + std::to_string(mult);
        }
    } else {
        den = "(" + format_poly(f.den(), var) + ")";
    }

    bool wrap_num = f.num().degree() > 0 && format_poly(f.num(), var).find_first_of("+-", 1) != std::string::npos;
    if (wrap_num) num = "(" + num + ")";
    return num + "/" + den;
}

namespace {

struct RenderPiece {
    bool negative = false;
    std::string body;
};

std::string format_value(const Rational& x, bool exact_data) {
    return exact_data ? format_rational(x) : format_double(to_double(x));
}

std::string exp_factor(const Rational& rate, bool exact_data) {
    return "e^{" + format_value(rate, exact_data) + " t}";
}

std::string t_factor(int power) {
    if (power == 0) return "";
    if (power == 1) return "t";
    return "t^" + std::to_string(power);
}

void append_space(std::string& s, const std::string& piece) {
    if (piece.empty()) return;
    if (!s.empty()) s += " ";
    s += piece;
}

RenderPiece render_real_atom(const Rational& coeff, int power, const Rational& rate,
                             bool exact_data) {
    RenderPiece piece;
    piece.negative = coeff < 0;
    Rational mag = coeff < 0 ? -coeff : coeff;
    bool has_factor = power > 0 || rate != 0;
    std::string body;
    if (!(mag == 1 && has_factor)) append_space(body, format_value(mag, exact_data));
    append_space(body, t_factor(power));
    if (rate != 0) append_space(body, exp_factor(rate, exact_data));
    piece.body = body;
    return piece;
}

RenderPiece render_pair(const GaussianRational& coeff, int power, const GaussianRational& rate,
                        bool exact_data) {
    // c t^p e^{(a+bi)t} + conj = t^p e^{at} (2Re(c) cos(bt) - 2Im(c) sin(bt))
    Rational c1 = 2 * coeff.re;
    Rational c2 = -2 * coeff.im;
    Rational b = rate.im < 0 ? -rate.im : rate.im;
    if (rate.im < 0) c2 = -c2;

    std::string angle = format_value(b, exact_data) + " t";
    std::string inner;
    if (c1 != 0) {
        std::string body;
        if (!(c1 == 1 || c1 == -1)) body = format_value(c1 < 0 ? -c1 : c1, exact_data) + " ";
        inner += (c1 < 0 ? "-" : "") + body + "cos(" + angle + ")";
    }
    if (c2 != 0) {
        std::string body;
        if (!(c2 == 1 || c2 == -1)) body = format_value(c2 < 0 ? -c2 : c2, exact_data) + " ";
        if (!inner.empty()) inner += c2 < 0 ? " - " : " + ";
        else if (c2 < 0) inner += "-";
        inner += body + "sin(" + angle + ")";
    }

    RenderPiece piece;
    std::string body;
    append_space(body, t_factor(power));
    if (rate.re != 0) append_space(body, exp_factor(rate.re, exact_data));
    append_space(body, "(" + inner + ")");
    piece.body = body;
    return piece;
}

}  // namespace

std::string format_regsig(const RegSig& g, bool exact_data) {
    if (g.atoms.empty()) return "0";
    std::string out;
    std::vector<bool> used(g.atoms.size(), false);
    for (size_t i = 0; i < g.atoms.size(); ++i) {
        if (used[i]) continue;
        const RegAtom& a = g.atoms[i];
        used[i] = true;
        if (a.rate.is_real() && a.coeff.is_real()) {
            RenderPiece piece = render_real_atom(a.coeff.re, a.power, a.rate.re, exact_data);
            if (out.empty()) {
                if (piece.negative) out += "-";
            } else {
                out += piece.negative ? " - " : " + ";
            }
            out += piece.body;
            continue;
        }
        for (size_t j = i + 1; j < g.atoms.size(); ++j) {
            if (!used[j] && g.atoms[j].power == a.power && g.atoms[j].rate == conj(a.rate) &&
                g.atoms[j].coeff == conj(a.coeff)) {
                used[j] = true;
                break;
            }
        }
        RenderPiece piece = render_pair(a.coeff, a.power, a.rate, exact_data);
        if (!out.empty()) out += " + ";
        out += piece.body;
    }
    return out;
}

std::string format_singdist(const SingDist& d) {
    if (d.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= d.max_order(); ++k) {
        Rational c = d.coeff(k);
        if (c == 0) continue;
        std::string delta = "delta";
        if (k == 1) delta += "'";
        else if (k == 2) delta += "''";
        else if (k >= 3) delta += "^(" + std::to_string(k) + ")";
        delta += "(t)";
        Rational mag = c < 0 ? -c : c;
        std::string body = mag == 1 ? delta : format_rational(mag) + " " + delta;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

std::string derivative_label(int order) {
    if (order == 0) return "y";
    if (order == 1) return "y'";
    if (order == 2) return "y''";
    return "y^(" + std::to_string(order) + ")";
}

}  // namespace lapinit
