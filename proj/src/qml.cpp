#include "qmlf/qml.hpp"

#include <cmath>

#include "lanczos.hpp"
#include "ml_series.hpp"
#include "qmlf/qops.hpp"

namespace qmlf {

void ClassicalMLParams::validate() const {
    if (!(eta.real() > 0.0) || !(kappa.real() > 0.0) || !(sigma.real() > 0.0)) {
        throw InvalidArgument(
            "ClassicalMLParams: Re(eta), Re(kappa), Re(sigma) must be > 0");
    }
}

void ExtendedMLParams::validate() const {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw InvalidArgument("ExtendedMLParams: eta must be a positive real");
    }
    if (!(kappa.real() > 0.0)) {
        throw InvalidArgument("ExtendedMLParams: Re(kappa) must be > 0");
    }
    if (!(sigma.real() > 0.0) || !(c.real() > sigma.real())) {
        throw InvalidArgument(
            "ExtendedMLParams: Re(c) > Re(sigma) > 0 required");
    }
}

EvalResult ml_classical(Complex u, const ClassicalMLParams& p,
                        const Truncation& trunc) {
    p.validate();
    trunc.validate();
    EvalResult r;
    Complex sum{0.0, 0.0};
    Complex term = std::exp(-detail::lgamma_complex(p.kappa));
    std::size_t consecutive_small = 0;
    double last_ratio = 1.0;
    for (std::size_t m = 0; m < trunc.max_terms; ++m) {
        sum += term;
        ++r.terms_used;
        double dm = static_cast<double>(m);
        Complex arg = p.eta * dm + p.kappa;
        Complex step = u * (p.sigma + dm) / (dm + 1.0) *
                       std::exp(detail::lgamma_complex(arg) -
                                detail::lgamma_complex(arg + p.eta));
        Complex next = term * step;
        double mag = std::abs(next);
        double prev = std::abs(term);
        last_ratio = prev > 0.0 ? mag / prev : 0.0;
        term = next;
        // Entire series: ratios decay like m^-Re(eta); once below 1/2 the
        // geometric bound is safe.
        if (last_ratio < 0.5) {
            double tail = mag / (1.0 - std::max(last_ratio, 0.0));
            if (tail <= trunc.abs_tol &&
                mag <= trunc.rel_tol * std::max(1.0, std::abs(sum))) {
                if (++consecutive_small >= 3) {
                    r.value = sum;
                    r.tail_estimate = tail;
                    r.converged = true;
                    return r;
                }
            } else {
                consecutive_small = 0;
            }
        } else {
            consecutive_small = 0;
        }
    }
    throw NonConvergence("ml_classical: term budget exhausted");
}

EvalResult q_mittag_leffler(Complex u, double eta, Complex kappa, QBase q,
                            const Truncation& trunc) {
    if (!(kappa.real() > 0.0)) {
        throw InvalidArgument("q_mittag_leffler: Re(kappa) must be > 0");
    }
    detail::MlSeries series(eta, kappa, q,
                            [](std::size_t) { return Complex(1.0, 0.0); });
    return series.eval(u, trunc);
}

EvalResult q_ml_prabhakar(Complex u, double eta, Complex kappa, Complex sigma,
                          QBase q, const Truncation& trunc) {
    if (!(kappa.real() > 0.0) || !(sigma.real() > 0.0)) {
        throw InvalidArgument(
            "q_ml_prabhakar: Re(kappa) > 0 and Re(sigma) > 0 required");
    }
    detail::MlSeries series(eta, kappa, q, detail::prabhakar_weight_step(sigma, q));
    return series.eval(u, trunc);
}

Complex beta_ratio(Complex sigma, Complex c, int m, QBase q) {
    if (m < 0) {
        throw InvalidArgument("beta_ratio: m must be >= 0");
    }
    if (!(sigma.real() > 0.0) || !(c.real() > sigma.real())) {
        throw InvalidArgument("beta_ratio: Re(c) > Re(sigma) > 0 required");
    }
    return q_beta(sigma, c - sigma, q) /
           q_beta(sigma + static_cast<double>(m), c - sigma, q);
}

EvalResult q_ml_extended(Complex u, const ExtendedMLParams& p, QBase q,
                         const Truncation& trunc,
                         std::vector<double>* term_magnitudes) {
    p.validate();
    detail::MlSeries series(p.eta, p.kappa, q,
                            detail::prabhakar_weight_step(p.sigma, q));
    return series.eval(u, trunc, term_magnitudes);
}

double convergence_radius(double eta, QBase q) {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw InvalidArgument("convergence_radius: eta must be a positive real");
    }
    return std::pow(1.0 - q.value(), -eta);
}

EvalResult recurrence_rhs(Complex u, const ExtendedMLParams& p, QBase q,
                          const Truncation& trunc) {
    p.validate();
    ExtendedMLParams shifted = p;
    shifted.sigma = p.sigma + 1.0;
    shifted.c = p.c + 1.0;
    EvalResult first = q_ml_extended(u, shifted, q, trunc);
    ExtendedMLParams bumped = shifted;
    bumped.kappa = p.kappa + p.eta;
    EvalResult second = q_ml_extended(u, bumped, q, trunc);
    Complex qsigma = std::exp(p.sigma * std::log(q.value()));
    EvalResult r;
    r.value = first.value - u * qsigma * second.value;
    r.terms_used = first.terms_used + second.terms_used;
    r.tail_estimate = first.tail_estimate + std::abs(u * qsigma) * second.tail_estimate;
    r.converged = first.converged && second.converged;
    return r;
}

EvalResult integral_representation(Complex u, const ExtendedMLParams& p,
                                   QBase q, const Truncation& trunc) {
    p.validate();
    double qq = q.value();
    if (std::abs(u) * std::pow(1.0 - qq, p.eta) >= 1.0) {
        throw DomainError("integral_representation: |u| outside the convergence disk");
    }
    // Inner function with upper parameter c; one evaluator shared across the
    // whole quadrature grid so the per-term gamma ratios are computed once.
    detail::MlSeries inner(p.eta, p.kappa, q,
                           detail::prabhakar_weight_step(p.c, q));
    Complex qc_sigma = std::exp((p.c - p.sigma) * std::log(qq));
    auto integrand = [&](Complex t) {
        // t^(sigma-1) (tq;q)_inf / (t q^(c-sigma);q)_inf
        Complex kernel = std::exp(detail::log_pochhammer_inf(t * qq, qq) -
                                  detail::log_pochhammer_inf(t * qc_sigma, qq));
        return std::pow(t, p.sigma - 1.0) * kernel * inner.eval(t * u, trunc).value;
    };
    EvalResult J = jackson_integral(integrand, 1.0, q, trunc);
    J.value /= q_beta(p.sigma, p.c - p.sigma, q);
    return J;
}

EvalResult derivative_closed_form(Complex u, Complex lambda,
                                  const ExtendedMLParams& p, int m, QBase q,
                                  const Truncation& trunc) {
    p.validate();
    if (m < 1) {
        throw InvalidArgument("derivative_closed_form: m must be >= 1");
    }
    if (std::abs(u) == 0.0) {
        throw InvalidArgument("derivative_closed_form: u must be nonzero");
    }
    Complex ueta = std::pow(u, Complex(p.eta, 0.0));
    Complex kappa_shifted = p.kappa - static_cast<double>(m);
    detail::MlSeries series(p.eta, kappa_shifted, q,
                            detail::prabhakar_weight_step(p.sigma, q));
    EvalResult r = series.eval(lambda * ueta, trunc);
    r.value *= std::pow(u, kappa_shifted - 1.0);
    return r;
}

EvalResult beta_weighted_integral(Complex x, Complex xi, Complex zeta,
                                  double rho, const ExtendedMLParams& p,
                                  QBase q, const Truncation& trunc) {
    p.validate();
    if (!(xi.real() > 0.0) || !(zeta.real() > 0.0)) {
        throw InvalidArgument(
            "beta_weighted_integral: Re(xi) > 0 and Re(zeta) > 0 required");
    }
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw InvalidArgument("beta_weighted_integral: rho must be a positive real");
    }
    // Weight B_q(xi + rho m, zeta) relative to B_q(xi, zeta); the two gamma
    // ratios cancel asymptotically, so the disk is the base one.
    auto prab = detail::prabhakar_weight_step(p.sigma, q);
    auto step = [prab, xi, zeta, rho, q](std::size_t m) {
        Complex a = xi + rho * static_cast<double>(m);
        return prab(m) * detail::q_gamma_ratio(a + zeta, Complex(rho, 0.0), q) /
               detail::q_gamma_ratio(a, Complex(rho, 0.0), q);
    };
    detail::MlSeries series(p.eta, p.kappa, q, step, q_beta(xi, zeta, q), 1.0);
    return series.eval(x, trunc);
}

EvalResult laplace_closed_form(Complex x, double rho, Complex s,
                               const ExtendedMLParams& p, QBase q,
                               const Truncation& trunc) {
    p.validate();
    if (!(s.real() > 0.0)) {
        throw InvalidArgument("laplace_closed_form: Re(s) > 0 required");
    }
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw InvalidArgument("laplace_closed_form: rho must be a positive real");
    }
    double qq = q.value();
    Complex srho = std::pow(s, Complex(rho, 0.0));
    Complex z = std::pow(1.0 - qq, rho) * x / srho;
    auto prab = detail::prabhakar_weight_step(p.sigma, q);
    // Extra weight Gamma_q(1 + rho m), whose step grows like (1-q)^-rho;
    // the effective ratio limit is |z| (1-q)^(eta - rho).
    auto step = [prab, rho, q](std::size_t m) {
        Complex a{1.0 + rho * static_cast<double>(m), 0.0};
        return prab(m) / detail::q_gamma_ratio(a, Complex(rho, 0.0), q);
    };
    detail::MlSeries series(p.eta, p.kappa, q, step, Complex(1.0, 0.0),
                            std::pow(1.0 - qq, -rho));
    EvalResult r = series.eval(z, trunc);
    r.value /= s;
    return r;
}

} // namespace qmlf
