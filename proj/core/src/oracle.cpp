#include "lapinit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lapinit {

namespace {

std::vector<double> solve_linear(std::vector<double> M, std::vector<double> r) {
    const int n = static_cast<int>(r.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int i = col + 1; i < n; ++i)
            if (std::fabs(M[i * n + col]) > std::fabs(M[pivot * n + col])) pivot = i;
        if (M[pivot * n + col] == 0.0) throw std::runtime_error("singular output-derivative system");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(M[col * n + j], M[pivot * n + j]);
            std::swap(r[col], r[pivot]);
        }
        for (int i = col + 1; i < n; ++i) {
            double f = M[i * n + col] / M[col * n + col];
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) M[i * n + j] -= f * M[col * n + j];
            r[i] -= f * r[col];
        }
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double acc = r[i];
        for (int j = i + 1; j < n; ++j) acc -= M[i * n + j] * x[j];
        x[i] = acc / M[i * n + i];
    }
    return x;
}

struct InputFn {
    const RegSig* regular;
    std::vector<double> delta_coeffs;
    double epsilon;

    double operator()(double t) const {
        double u = reg_eval(*regular, t);
        for (size_t k = 0; k < delta_coeffs.size(); ++k)
            u += delta_coeffs[k] * mollifier(t, epsilon, static_cast<int>(k));
        return u;
    }
};

InputFn make_input_fn(const GenSignal& input, double epsilon, bool allow_order_two) {
    InputFn fn{&input.regular, {}, epsilon};
    const int top = input.singular.max_order();
    if (top > 2 || (top == 2 && !allow_order_two))
        throw std::invalid_argument(
            "mollified impulse derivatives are supported up to order " +
            std::string(allow_order_two ? "2" : "1") + ", input carries order " +
            std::to_string(top));
    for (int k = 0; k <= top; ++k) fn.delta_coeffs.push_back(to_double(input.singular.coeff(k)));
    return fn;
}

void rk4_step(const StateSpace& ss, const InputFn& u, double t, double h, std::vector<double>& x) {
    const int n = ss.n;
    auto deriv = [&](const std::vector<double>& state, double time, std::vector<double>& out) {
        double uv = u(time);
        for (int i = 0; i < n; ++i) {
            double acc = ss.B[i] * uv;
            for (int j = 0; j < n; ++j) acc += ss.a(i, j) * state[j];
            out[i] = acc;
        }
    };
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    deriv(x, t, k1);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    deriv(tmp, t + 0.5 * h, k2);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    deriv(tmp, t + 0.5 * h, k3);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
    deriv(tmp, t + h, k4);
    for (int i = 0; i < n; ++i) x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

double output_derivative(const StateSpace& ss, int order, const std::vector<double>& x,
                         const std::vector<double>& input_derivs) {
    double acc = 0.0;
    for (int j = 0; j < ss.n; ++j) acc += ss.output_state[order][j] * x[j];
    for (size_t i = 0; i < ss.output_input[order].size() && i < input_derivs.size(); ++i)
        acc += ss.output_input[order][i] * input_derivs[i];
    return acc;
}

}  // namespace

double mollifier(double t, double epsilon, int derivative) {
    if (t <= 0.0 || t >= epsilon) return 0.0;
    const double tau = 2.0 * t / epsilon - 1.0;
    const double w = 1.0 - tau * tau;
    const double scale = 35.0 / (16.0 * epsilon);
    const double chain = 2.0 / epsilon;
    switch (derivative) {
        case 0: return scale * w * w * w;
        case 1: return scale * chain * (-6.0 * tau * w * w);
        case 2: return scale * chain * chain * (w * (30.0 * tau * tau - 6.0));
        default: throw std::invalid_argument("mollifier derivatives above order 2 are unsupported");
    }
}

StateSpace realize_state_space(const SysSpec& sys) {
    if (sys.n < 1) throw std::invalid_argument("state-space realization requires order n >= 1");

    const int n = sys.n;
    StateSpace ss;
    ss.n = n;

    std::vector<double> padded(n + 1, 0.0);
    for (int j = 0; j <= sys.m; ++j) padded[n - sys.m + j] = to_double(sys.b[j]);
    std::vector<double> a(n + 1, 0.0);
    for (int i = 0; i <= n; ++i) a[i] = to_double(sys.a[i]);

    std::vector<double> beta(n + 1, 0.0);
    beta[0] = padded[0];
    for (int k = 1; k <= n; ++k) {
        double acc = padded[k];
        for (int i = 1; i <= k; ++i) acc -= a[i] * beta[k - i];
        beta[k] = acc;
    }

    // Chain structure: xdot_k = x_{k+1} + beta_k u, xdot_n = -sum a_i x_{n+1-i}
    // + beta_n u, y = x_1 + beta_0 u. Output derivatives are then triangular
    // in the state: y^(k) = x_{k+1} + sum_{i<=k} beta_i u^(k-i).
    ss.A.assign(n * n, 0.0);
    ss.B.assign(n, 0.0);
    ss.C.assign(n, 0.0);
    for (int i = 0; i + 1 < n; ++i) ss.A[i * n + (i + 1)] = 1.0;
    for (int j = 0; j < n; ++j) ss.A[(n - 1) * n + j] = -a[n - j];
    for (int i = 0; i < n; ++i) ss.B[i] = beta[i + 1];
    ss.C[0] = 1.0;
    ss.D = beta[0];

    // Linear forms y^(k) = w_k . x + sum d_{k,i} u^(i), built by propagating
    // w through the dynamics.
    std::vector<double> w = ss.C;
    std::vector<double> d{ss.D};
    for (int k = 0; k < n; ++k) {
        ss.output_state.push_back(w);
        ss.output_input.push_back(d);
        std::vector<double> w_next(n, 0.0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) w_next[j] += ss.a(i, j) * w[i];
        double wb = 0.0;
        for (int i = 0; i < n; ++i) wb += w[i] * ss.B[i];
        std::vector<double> d_next(d.size() + 1, 0.0);
        d_next[0] = wb;
        for (size_t i = 0; i < d.size(); ++i) d_next[i + 1] = d[i];
        w = std::move(w_next);
        d = std::move(d_next);
    }

    // Recover the 0- state from pre-initial output derivatives; the input's
    // pre-history is the constant baseline, so only u(0-) contributes.
    const double u_pre = to_double(sys.input.regular.pre_value);
    std::vector<double> M(n * n, 0.0);
    std::vector<double> rhs(n, 0.0);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) M[k * n + j] = ss.output_state[k][j];
        rhs[k] = to_double(sys.y_pre[k]) - ss.output_input[k][0] * u_pre;
    }
    ss.x0 = solve_linear(std::move(M), std::move(rhs));
    return ss;
}

std::complex<double> state_space_transfer(const StateSpace& ss, std::complex<double> s) {
    const int n = ss.n;
    std::vector<std::complex<double>> M(n * n);
    std::vector<std::complex<double>> rhs(ss.B.begin(), ss.B.end());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i * n + j] = (i == j ? s : 0.0) - ss.a(i, j);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int i = col + 1; i < n; ++i)
            if (std::abs(M[i * n + col]) > std::abs(M[pivot * n + col])) pivot = i;
        if (std::abs(M[pivot * n + col]) == 0.0) throw std::runtime_error("frequency hits an eigenvalue");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(M[col * n + j], M[pivot * n + j]);
            std::swap(rhs[col], rhs[pivot]);
        }
        for (int i = col + 1; i < n; ++i) {
            std::complex<double> f = M[i * n + col] / M[col * n + col];
            for (int j = col; j < n; ++j) M[i * n + j] -= f * M[col * n + j];
            rhs[i] -= f * rhs[col];
        }
    }
    std::vector<std::complex<double>> v(n);
    for (int i = n - 1; i >= 0; --i) {
        std::complex<double> acc = rhs[i];
        for (int j = i + 1; j < n; ++j) acc -= M[i * n + j] * v[j];
        v[i] = acc / M[i * n + i];
    }
    std::complex<double> y = ss.D;
    for (int i = 0; i < n; ++i) y += ss.C[i] * v[i];
    return y;
}

Trajectory integrate_mollified(const StateSpace& ss, const GenSignal& input, double epsilon,
                               double t_end, double dt, bool allow_order_two) {
    if (epsilon <= 0.0) throw std::invalid_argument("mollifier width must be positive");
    if (dt <= 0.0 || dt > epsilon / 20.0)
        throw std::invalid_argument("step size must satisfy 0 < dt <= epsilon/20");
    if (t_end <= 10.0 * epsilon) throw std::invalid_argument("t_end must exceed 10*epsilon");

    InputFn u = make_input_fn(input, epsilon, allow_order_two);

    Trajectory traj;
    traj.epsilon = epsilon;
    std::vector<double> x = ss.x0;
    double t = 0.0;
    const double fine_until = 2.0 * epsilon;
    const double fine_step = std::min(epsilon / 40.0, dt);

    auto emit = [&](double time) {
        double y = ss.D * u(time);
        for (int i = 0; i < ss.n; ++i) y += ss.C[i] * x[i];
        traj.times.push_back(time);
        traj.values.push_back(y);
    };
    emit(0.0);
    while (t < t_end - 1e-12 * t_end) {
        double h = t < fine_until ? fine_step : dt;
        if (t + h > t_end) h = t_end - t;
        rk4_step(ss, u, t, h, x);
        t += h;
        for (double xi : x)
            if (!std::isfinite(xi))
                throw std::runtime_error("state diverged at t = " + format_double(t));
        emit(t);
    }
    return traj;
}

std::vector<JumpEstimate> estimate_jumps(const StateSpace& ss, const GenSignal& input,
                                         const std::vector<double>& epsilons,
                                         bool allow_order_two) {
    if (epsilons.size() < 2)
        throw std::invalid_argument("jump estimation needs at least two mollifier widths");
    for (size_t i = 1; i < epsilons.size(); ++i)
        if (!(epsilons[i - 1] >= 2.0 * epsilons[i]))
            throw std::invalid_argument("mollifier widths must decrease by a factor of at least 2");

    const double u_pre = to_double(input.regular.pre_value);

    // Derivatives of the smooth input, for evaluating output forms at 5*eps.
    std::vector<RegSig> reg_derivs{input.regular};
    for (int k = 1; k < ss.n; ++k) reg_derivs.push_back(reg_derivative(reg_derivs.back()));

    std::vector<std::vector<double>> raw(ss.n);
    for (double eps : epsilons) {
        InputFn u = make_input_fn(input, eps, allow_order_two);
        std::vector<double> x = ss.x0;
        const double h = eps / 40.0;
        const double t_stop = 5.0 * eps;
        double t = 0.0;
        for (int step = 0; step < 200; ++step) {
            rk4_step(ss, u, t, h, x);
            t += h;
        }
        for (double xi : x)
            if (!std::isfinite(xi))
                throw std::runtime_error("state diverged before t = " + format_double(t_stop));

        std::vector<double> u_derivs(ss.n, 0.0);
        for (int i = 0; i < ss.n; ++i) u_derivs[i] = reg_eval(reg_derivs[i], t_stop);
        std::vector<double> u_pre_derivs(ss.n, 0.0);
        u_pre_derivs[0] = u_pre;
        for (int k = 0; k < ss.n; ++k) {
            double at_stop = output_derivative(ss, k, x, u_derivs);
            double at_pre = output_derivative(ss, k, ss.x0, u_pre_derivs);
            raw[k].push_back(at_stop - at_pre);
        }
    }

    std::vector<JumpEstimate> out;
    for (int k = 0; k < ss.n; ++k) {
        JumpEstimate est;
        est.order = k;
        est.raw = raw[k];
        std::vector<double> pairwise;
        for (size_t i = 1; i < epsilons.size(); ++i) {
            double e1 = epsilons[i - 1], e2 = epsilons[i];
            double j = raw[k][i] + (raw[k][i] - raw[k][i - 1]) * e2 / (e1 - e2);
            pairwise.push_back(j);
        }
        est.extrapolated = pairwise.back();
        if (pairwise.size() >= 2) {
            double delta = std::fabs(pairwise.back() - pairwise[pairwise.size() - 2]);
            est.converged = delta <= 5e-2 * (1.0 + std::fabs(est.extrapolated));
        }
        out.push_back(std::move(est));
    }
    return out;
}

}  // namespace lapinit
