#include "qmlf/qops.hpp"

#include <array>
#include <cmath>

namespace qmlf {

namespace {

Complex q_diff_once(const ScalarFunction& f, Complex u, double q) {
    return (f(u) - f(u * q)) / (u * (1.0 - q));
}

Complex q_diff_iter(const ScalarFunction& f, Complex u, double q, int m) {
    if (m == 1) return q_diff_once(f, u, q);
    auto inner = [&](Complex v) { return q_diff_iter(f, v, q, m - 1); };
    return q_diff_once(inner, u, q);
}

} // namespace

Complex q_derivative(const ScalarFunction& f, Complex u, QBase q, int m) {
    if (m < 1) {
        throw InvalidArgument("q_derivative: order m must be >= 1");
    }
    double qq = q.value();
    if (std::abs(u) > 0.0) {
        return q_diff_iter(f, u, qq, m);
    }
    // Limit at u = 0: evaluate D_q^m f on the ladder {h, hq, hq^2} and
    // extrapolate the quadratic through the three samples to u = 0.
    const double h = 1e-6;
    std::array<Complex, 3> x{Complex(h, 0.0), Complex(h * qq, 0.0),
                             Complex(h * qq * qq, 0.0)};
    std::array<Complex, 3> y{};
    for (int i = 0; i < 3; ++i) y[i] = q_diff_iter(f, x[i], qq, m);
    // Neville to x = 0.
    for (int level = 1; level < 3; ++level) {
        for (int i = 0; i < 3 - level; ++i) {
            y[i] = (x[i + level] * y[i] - x[i] * y[i + 1]) / (x[i + level] - x[i]);
        }
    }
    return y[0];
}

EvalResult jackson_integral(const ScalarFunction& f, double a, QBase q,
                            const Truncation& trunc) {
    trunc.validate();
    if (!(a > 0.0)) {
        throw InvalidArgument("jackson_integral: upper limit a must be > 0");
    }
    double qq = q.value();
    EvalResult r;
    Complex sum{0.0, 0.0};
    double qm = 1.0;
    std::size_t consecutive_small = 0;
    double last_mag = 0.0;
    for (std::size_t m = 0; m < trunc.max_terms; ++m) {
        Complex term = qm * f(Complex(a * qm, 0.0));
        sum += term;
        ++r.terms_used;
        qm *= qq;
        last_mag = std::abs(term);
        // Three consecutive sub-tolerance terms, so isolated zeros of f on
        // the grid cannot end the sum early.
        if (last_mag <= trunc.abs_tol &&
            last_mag <= trunc.rel_tol * std::max(1.0, std::abs(sum))) {
            if (++consecutive_small >= 3) {
                r.value = a * (1.0 - qq) * sum;
                r.tail_estimate = a * (1.0 - qq) * last_mag * qq / (1.0 - qq);
                r.converged = r.tail_estimate <= trunc.abs_tol;
                return r;
            }
        } else {
            consecutive_small = 0;
        }
    }
    throw NonConvergence("jackson_integral: term budget exhausted");
}

EvalResult q_laplace(const ScalarFunction& f, Complex s, QBase q,
                     const Truncation& trunc) {
    trunc.validate();
    if (!(s.real() > 0.0)) {
        throw InvalidArgument("q_laplace: Re(s) > 0 required");
    }
    double qq = q.value();
    Complex qq_inf = detail::pochhammer_inf_eps(Complex(qq, 0.0), qq);
    EvalResult r;
    Complex sum{0.0, 0.0};
    double qj = 1.0;        // q^j
    Complex poch{1.0, 0.0}; // (q;q)_j
    std::size_t consecutive_small = 0;
    for (std::size_t j = 0; j < trunc.max_terms; ++j) {
        Complex term = qj * f(qj / s) / poch;
        sum += term;
        ++r.terms_used;
        poch *= (1.0 - qq * qj);
        qj *= qq;
        double mag = std::abs(term);
        if (mag <= trunc.abs_tol &&
            mag <= trunc.rel_tol * std::max(1.0, std::abs(sum))) {
            if (++consecutive_small >= 3) {
                Complex scale = qq_inf / s;
                r.value = scale * sum;
                r.tail_estimate = std::abs(scale) * mag * qq / (1.0 - qq);
                r.converged = r.tail_estimate <= trunc.abs_tol;
                return r;
            }
        } else {
            consecutive_small = 0;
        }
    }
    throw NonConvergence("q_laplace: term budget exhausted");
}

} // namespace qmlf
