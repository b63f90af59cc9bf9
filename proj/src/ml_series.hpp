#pragma once

// Internal driver for every series of the shape
//     sum_{m>=0} w_m u^m / Gamma_q(eta m + kappa),
// where the weight sequence is described by w_0 and the multiplicative
// update w_{m+1}/w_m. Covers the q-Mittag-Leffler family and the termwise
// Kober images; not part of the public API.

#include <cstddef>
#include <functional>
#include <vector>

#include "qmlf/qcore.hpp"

namespace qmlf::detail {

class MlSeries {
  public:
    // weight_step(m) = w_{m+1} / w_m, required to stay bounded with
    // |weight_step(m)| -> weight_ratio_limit. The series then converges
    // absolutely for |u| < (1-q)^-eta / weight_ratio_limit, which is what
    // eval() enforces.
    MlSeries(double eta, Complex kappa, QBase q,
             std::function<Complex(std::size_t)> weight_step,
             Complex w0 = Complex(1.0, 0.0), double weight_ratio_limit = 1.0);

    double radius() const;

    // Sums the series under the truncation policy. Optionally records the
    // magnitude of every summed term (used by the convergence scan).
    EvalResult eval(Complex u, const Truncation& trunc,
                    std::vector<double>* term_magnitudes = nullptr) const;

  private:
    // Cached u-free factor T_{m+1}/(u T_m) for the ratio regime.
    Complex step(std::size_t m) const;

    double eta_;
    Complex kappa_;
    QBase q_;
    std::function<Complex(std::size_t)> weight_step_;
    Complex w0_;
    double weight_ratio_limit_;
    // First index whose gamma argument has real part > 1/2; below it terms
    // are formed directly through 1/Gamma_q, which is entire and absorbs
    // any poles of Gamma_q (their coefficients become exact zeros).
    std::size_t direct_until_;
    mutable std::vector<Complex> steps_;
};

// Weight update of the q-Prabhakar coefficient (q^sigma;q)_m / (q;q)_m.
std::function<Complex(std::size_t)> prabhakar_weight_step(Complex sigma, QBase q);

} // namespace qmlf::detail
