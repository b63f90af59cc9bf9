#include "qmlf/qcore.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace qmlf {

namespace {

// Iteration cap for the machine-precision infinite products. At q = 0.999
// the factor |lambda| q^i needs ~37k steps to fall below eps, so the cap is
// set well above anything a valid q in the test range can require.
constexpr std::size_t kInfProductCap = 5'000'000;

constexpr double kPoleTol = 1e-12;

bool is_nonpositive_integer(Complex u, double tol = kPoleTol) {
    if (std::abs(u.imag()) > tol) return false;
    double r = std::round(u.real());
    return r <= 0.0 && std::abs(u.real() - r) < tol;
}

Complex cpow_principal(double base, Complex exponent) {
    // base > 0 throughout this library, so log(base) is real.
    return std::exp(exponent * std::log(base));
}

} // namespace

QBase::QBase(double q) : q_(q) {
    if (!(q > 0.0) || !(q < 1.0) || !std::isfinite(q)) {
        throw InvalidArgument("QBase: q must satisfy 0 < q < 1");
    }
}

void Truncation::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_terms < 1) {
        throw InvalidArgument(
            "Truncation: abs_tol > 0, rel_tol > 0, max_terms >= 1 required");
    }
}

Complex q_number(Complex u, QBase q) {
    return (1.0 - cpow_principal(q.value(), u)) / (1.0 - q.value());
}

EvalResult q_pochhammer(Complex lambda, QBase q, int order) {
    if (order < 0) {
        throw InvalidArgument("q_pochhammer: finite order must be >= 0");
    }
    EvalResult r;
    Complex prod{1.0, 0.0};
    Complex cur = lambda;
    for (int i = 0; i < order; ++i) {
        prod *= (1.0 - cur);
        cur *= q.value();
    }
    r.value = prod;
    r.terms_used = static_cast<std::size_t>(order);
    r.tail_estimate = 0.0;
    r.converged = true;
    return r;
}

EvalResult q_pochhammer(Complex lambda, QBase q, InfiniteOrder,
                        const Truncation& trunc) {
    trunc.validate();
    double qq = q.value();
    // Remaining factors after stopping at q^i satisfy
    // |log prod_tail| <= sum_{j>i} |lambda| q^j = |lambda q^i| q/(1-q);
    // stop once that bound is inside abs_tol.
    double cutoff = trunc.abs_tol * (1.0 - qq) / qq;
    EvalResult r;
    Complex prod{1.0, 0.0};
    Complex cur = lambda;
    std::size_t i = 0;
    for (; i < trunc.max_terms; ++i) {
        if (std::abs(cur) < cutoff) break;
        prod *= (1.0 - cur);
        cur *= qq;
    }
    if (std::abs(cur) >= cutoff) {
        throw NonConvergence("q_pochhammer: factor criterion not met within max_terms");
    }
    r.value = prod;
    r.terms_used = i;
    r.tail_estimate = std::abs(cur) * qq / (1.0 - qq);
    r.converged = true;
    return r;
}

EvalResult q_pochhammer(Complex lambda, QBase q, Complex order,
                        const Truncation& trunc) {
    EvalResult num = q_pochhammer(lambda, q, infinite_order, trunc);
    Complex shifted = lambda * cpow_principal(q.value(), order);
    EvalResult den = q_pochhammer(shifted, q, infinite_order, trunc);
    if (std::abs(den.value) == 0.0) {
        throw DivisionByZero("q_pochhammer: denominator product (lambda q^eta; q)_inf vanished");
    }
    EvalResult r;
    r.value = num.value / den.value;
    r.terms_used = num.terms_used + den.terms_used;
    r.tail_estimate = num.tail_estimate + den.tail_estimate;
    r.converged = num.converged && den.converged;
    return r;
}

Complex q_power_difference(double s, double t, QBase q, int order) {
    if (order < 0) {
        throw InvalidArgument("q_power_difference: integer order must be >= 0");
    }
    Complex prod{1.0, 0.0};
    double cur = t;
    for (int i = 0; i < order; ++i) {
        prod *= (s - cur);
        cur *= q.value();
    }
    return prod;
}

Complex q_power_difference(double s, double t, QBase q, double order) {
    double rounded = std::round(order);
    if (order >= 0.0 && std::abs(order - rounded) < kPoleTol) {
        return q_power_difference(s, t, q, static_cast<int>(rounded));
    }
    if (s == 0.0) {
        throw InvalidArgument("q_power_difference: s = 0 with non-integer order");
    }
    EvalResult p = q_pochhammer(Complex(t / s, 0.0), q, Complex(order, 0.0));
    return std::pow(Complex(s, 0.0), Complex(order, 0.0)) * p.value;
}

Complex q_binomial(Complex tau, int m, QBase q) {
    if (m < 0) {
        throw InvalidArgument("q_binomial: m must be >= 0");
    }
    // (q^-tau;q)_m/(q;q)_m (-1)^m q^(tau m - C(m,2)) re-grouped factor by
    // factor as (1 - q^(tau-i)) / (1 - q^(i+1)), which keeps every factor O(1).
    Complex prod{1.0, 0.0};
    Complex num_cur = cpow_principal(q.value(), tau);
    double den_cur = q.value();
    for (int i = 0; i < m; ++i) {
        prod *= (1.0 - num_cur) / (1.0 - den_cur);
        num_cur /= q.value();
        den_cur *= q.value();
    }
    return prod;
}

namespace detail {

Complex log_pochhammer_inf(Complex lambda, double q) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    bool real_path = lambda.imag() == 0.0 && lambda.real() <= 1.0;
    Complex sum{0.0, 0.0};
    Complex cur = lambda;
    for (std::size_t i = 0; i < kInfProductCap; ++i) {
        if (std::abs(cur) < eps) {
            // Remaining factors contribute -sum lambda q^j to the log.
            return sum - cur / (1.0 - q);
        }
        if (real_path) {
            sum += std::log1p(-cur.real());
        } else {
            sum += std::log(1.0 - cur);
        }
        cur *= q;
    }
    throw NonConvergence("log_pochhammer_inf: product cap exceeded (q too close to 1)");
}

Complex pochhammer_inf_eps(Complex lambda, double q) {
    return std::exp(log_pochhammer_inf(lambda, q));
}

Complex q_gamma_ratio(Complex a, Complex shift, QBase q) {
    double qq = q.value();
    Complex qa = std::exp(a * std::log(qq));
    Complex qas = std::exp((a + shift) * std::log(qq));
    Complex log_den = log_pochhammer_inf(qa, qq);
    if (log_den.real() == -std::numeric_limits<double>::infinity()) {
        throw PoleError("q_gamma_ratio: Gamma_q pole in the numerator argument");
    }
    return std::exp(shift * std::log(1.0 - qq) + log_pochhammer_inf(qas, qq) -
                    log_den);
}

} // namespace detail

Complex q_gamma(Complex u, QBase q) {
    if (is_nonpositive_integer(u)) {
        throw PoleError("q_gamma: pole at nonpositive integer argument");
    }
    double qq = q.value();
    Complex qu = std::exp(u * std::log(qq));
    return std::exp(detail::log_pochhammer_inf(Complex(qq, 0.0), qq) -
                    detail::log_pochhammer_inf(qu, qq) +
                    (1.0 - u) * std::log(1.0 - qq));
}

Complex inv_q_gamma(Complex u, QBase q) {
    double qq = q.value();
    Complex qu = std::exp(u * std::log(qq));
    // exp of -inf at the poles of Gamma_q gives the exact zero wanted there.
    return std::exp(detail::log_pochhammer_inf(qu, qq) -
                    detail::log_pochhammer_inf(Complex(qq, 0.0), qq) +
                    (u - 1.0) * std::log(1.0 - qq));
}

Complex q_beta(Complex eta, Complex kappa, QBase q) {
    if (!(eta.real() > 0.0) || !(kappa.real() > 0.0)) {
        throw InvalidArgument("q_beta: Re(eta) > 0 and Re(kappa) > 0 required");
    }
    // Gamma_q(eta) / Gamma_q(eta + kappa) * Gamma_q(kappa), with the ratio
    // taken first so large arguments never materialize as bare gammas.
    return detail::q_gamma_ratio(eta, kappa, q) * q_gamma(kappa, q);
}

EvalResult q_exponential(Complex u, QBase q, ExpKind kind,
                         const Truncation& trunc) {
    trunc.validate();
    if (kind == ExpKind::small && !(std::abs(u) < 1.0)) {
        throw DomainError("q_exponential: e_q requires |u| < 1");
    }
    // Both kinds are evaluated through their product closed forms,
    //   E_q^u = (-u;q)_inf and e_q^u = 1/(u;q)_inf:
    // summing the defining series loses ~half the digits for strongly
    // alternating arguments (|u|, q both near 1), while the products have
    // no cancellation. The series form is kept as a test-side oracle.
    double qq = q.value();
    Complex lambda = kind == ExpKind::big ? -u : u;
    Complex prod{1.0, 0.0};
    Complex cur = lambda;
    std::size_t i = 0;
    bool done = false;
    for (; i < trunc.max_terms; ++i) {
        // The dropped factors change log(prod) by at most |cur| q/(1-q);
        // scale that bound to the value actually returned.
        double log_tail = std::abs(cur) * qq / (1.0 - qq);
        double mag = std::abs(prod);
        double value_scale = kind == ExpKind::big
                                 ? std::max(1.0, mag)
                                 : std::max(1.0, 1.0 / std::max(mag, 1e-300));
        if (log_tail * value_scale <= trunc.abs_tol) {
            done = true;
            break;
        }
        prod *= (1.0 - cur);
        cur *= qq;
    }
    if (!done) {
        throw NonConvergence("q_exponential: factor criterion not met within max_terms");
    }
    EvalResult r;
    r.value = kind == ExpKind::big ? prod : 1.0 / prod;
    r.terms_used = i;
    r.tail_estimate = std::abs(r.value) * std::abs(cur) * qq / (1.0 - qq);
    r.converged = true;
    return r;
}

} // namespace qmlf
