#include "qmlf/kober.hpp"

#include <cmath>

#include "ml_series.hpp"

namespace qmlf {

namespace {

bool hits_nonpositive_integer(Complex z) {
    if (std::abs(z.imag()) > 1e-12) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-12;
}

void check_image_arguments(Complex nu, Complex mu, int m) {
    Complex a = nu + static_cast<double>(m) + 1.0;
    if (hits_nonpositive_integer(a) || hits_nonpositive_integer(a + mu)) {
        throw PoleError("kober image: gamma argument at a nonpositive integer");
    }
}

} // namespace

EvalResult kober_integral_direct(const ScalarFunction& f, double u,
                                 KoberParams k, QBase q,
                                 const Truncation& trunc) {
    if (!(u > 0.0)) {
        throw InvalidArgument("kober_integral_direct: u must be > 0");
    }
    if (!(k.mu.real() > 0.0)) {
        throw InvalidArgument("kober_integral_direct: Re(mu) > 0 required");
    }
    double qq = q.value();
    Complex qmu = std::exp(k.mu * std::log(qq));
    auto integrand = [&](Complex t) {
        // (u - tq)^((mu-1)) = u^(mu-1) (tq/u;q)_inf / (t q^mu / u;q)_inf
        Complex kernel = std::exp(detail::log_pochhammer_inf(t * qq / u, qq) -
                                  detail::log_pochhammer_inf(t * qmu / u, qq));
        return kernel * std::pow(t, k.nu) * f(t);
    };
    EvalResult J = jackson_integral(integrand, u, q, trunc);
    Complex scale = std::pow(Complex(u, 0.0), k.mu - 1.0) *
                    std::pow(Complex(u, 0.0), -k.nu - k.mu) / q_gamma(k.mu, q);
    J.value *= scale;
    J.tail_estimate *= std::abs(scale);
    return J;
}

Complex kober_image_power(int m, KoberParams k, QBase q, KoberKind kind) {
    if (m < 0) {
        throw InvalidArgument("kober_image_power: m must be >= 0");
    }
    check_image_arguments(k.nu, k.mu, m);
    Complex a = k.nu + static_cast<double>(m) + 1.0;
    Complex ratio = detail::q_gamma_ratio(a, k.mu, q);
    return kind == KoberKind::integral ? ratio : 1.0 / ratio;
}

namespace {

EvalResult kober_series(Complex u, const ExtendedMLParams& p, KoberParams k,
                        QBase q, KoberKind kind, const Truncation& trunc) {
    p.validate();
    check_image_arguments(k.nu, k.mu, 0);
    double qq = q.value();
    Complex qnu1 = std::exp((k.nu + 1.0) * std::log(qq));
    Complex qnumu1 = std::exp((k.nu + k.mu + 1.0) * std::log(qq));
    auto prab = detail::prabhakar_weight_step(p.sigma, q);
    // Image ratio between consecutive m: [nu+m+1]_q / [nu+mu+m+1]_q for the
    // integral kind, reciprocal for the derivative kind; the limit is 1, so
    // the disk of the base series is unchanged.
    auto step = [prab, qq, qnu1, qnumu1, kind](std::size_t m) {
        double qm = std::pow(qq, static_cast<double>(m));
        Complex num = 1.0 - qnu1 * qm;
        Complex den = 1.0 - qnumu1 * qm;
        if (std::abs(den) == 0.0 || std::abs(num) == 0.0) {
            throw PoleError("kober image: gamma argument at a nonpositive integer");
        }
        Complex factor = num / den;
        if (kind == KoberKind::derivative) factor = 1.0 / factor;
        return prab(m) * factor;
    };
    Complex w0 = kober_image_power(0, k, q, kind);
    detail::MlSeries series(p.eta, p.kappa, q, step, w0, 1.0);
    return series.eval(u, trunc);
}

} // namespace

EvalResult kober_I_extended(Complex u, const ExtendedMLParams& p,
                            KoberParams k, QBase q, const Truncation& trunc) {
    return kober_series(u, p, k, q, KoberKind::integral, trunc);
}

EvalResult kober_D_extended(Complex u, const ExtendedMLParams& p,
                            KoberParams k, QBase q, const Truncation& trunc) {
    return kober_series(u, p, k, q, KoberKind::derivative, trunc);
}

} // namespace qmlf
