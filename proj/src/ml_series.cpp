#include "ml_series.hpp"

#include <algorithm>
#include <cmath>

namespace qmlf::detail {

MlSeries::MlSeries(double eta, Complex kappa, QBase q,
                   std::function<Complex(std::size_t)> weight_step, Complex w0,
                   double weight_ratio_limit)
    : eta_(eta), kappa_(kappa), q_(q), weight_step_(std::move(weight_step)),
      w0_(w0), weight_ratio_limit_(weight_ratio_limit) {
    if (!(eta_ > 0.0) || !std::isfinite(eta_)) {
        throw InvalidArgument("MlSeries: eta must be a positive real");
    }
    double m = 0.0;
    while (kappa_.real() + eta_ * m <= 0.5) m += 1.0;
    direct_until_ = static_cast<std::size_t>(m);
}

double MlSeries::radius() const {
    return std::pow(1.0 - q_.value(), -eta_) / weight_ratio_limit_;
}

Complex MlSeries::step(std::size_t m) const {
    // Only reached with m >= direct_until_, where the gamma arguments are
    // clear of the poles; cache indices are offset accordingly.
    std::size_t idx = m - direct_until_;
    while (steps_.size() <= idx) {
        std::size_t i = steps_.size() + direct_until_;
        Complex arg = kappa_ + eta_ * static_cast<double>(i);
        steps_.push_back(weight_step_(i) *
                         q_gamma_ratio(arg, Complex(eta_, 0.0), q_));
    }
    return steps_[idx];
}

EvalResult MlSeries::eval(Complex u, const Truncation& trunc,
                          std::vector<double>* term_magnitudes) const {
    trunc.validate();
    double ratio_limit =
        std::abs(u) * std::pow(1.0 - q_.value(), eta_) * weight_ratio_limit_;
    if (std::abs(u) >= radius() || ratio_limit >= 1.0) {
        throw DomainError("series argument outside the convergence disk");
    }

    EvalResult r;
    Complex first = w0_ * inv_q_gamma(kappa_, q_);
    if (std::abs(u) == 0.0) {
        r.value = first;
        r.terms_used = 1;
        r.tail_estimate = 0.0;
        r.converged = true;
        if (term_magnitudes) term_magnitudes->push_back(std::abs(first));
        return r;
    }

    Complex sum{0.0, 0.0};
    Complex term = first;
    Complex w = w0_;
    Complex upow{1.0, 0.0};
    double prev_mag = 0.0;
    std::size_t consecutive_small = 0;
    for (std::size_t m = 0; m < trunc.max_terms; ++m) {
        sum += term;
        ++r.terms_used;
        if (term_magnitudes) term_magnitudes->push_back(std::abs(term));
        prev_mag = std::abs(term);

        // Next term: direct through 1/Gamma_q while poles are reachable,
        // ratio recurrence afterwards (no over/underflow for large m).
        if (m + 1 <= direct_until_) {
            w *= weight_step_(m);
            upow *= u;
            Complex arg = kappa_ + eta_ * static_cast<double>(m + 1);
            term = w * upow * inv_q_gamma(arg, q_);
            // The direct phase can contain exact zeros at Gamma_q poles;
            // never let those count as convergence.
            consecutive_small = 0;
            continue;
        }
        term = term * u * step(m);

        double mag = std::abs(term);
        double rhat = ratio_limit;
        if (prev_mag > 0.0) rhat = std::max(rhat, mag / prev_mag);
        rhat = std::min(rhat, 0.999);
        double tail = mag / (1.0 - rhat);
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
    }
    throw NonConvergence("series term budget exhausted");
}

std::function<Complex(std::size_t)> prabhakar_weight_step(Complex sigma, QBase q) {
    double qq = q.value();
    Complex qsigma = std::exp(sigma * std::log(qq));
    return [qq, qsigma](std::size_t m) {
        double qm = std::pow(qq, static_cast<double>(m));
        return (1.0 - qsigma * qm) / (1.0 - qq * qm);
    };
}

} // namespace qmlf::detail
