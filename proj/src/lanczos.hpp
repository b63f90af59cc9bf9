#pragma once

// Complex log-gamma via the Lanczos approximation (g = 7, 9 coefficients),
// valid for Re(z) > 0, which is all the classical reference series needs.

#include <cmath>
#include <complex>

namespace qmlf::detail {

inline std::complex<double> lgamma_complex(std::complex<double> z) {
    static const double g = 7.0;
    static const double coeff[9] = {
        0.99999999999980993,    676.5203681218851,      -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7};

    const double half_log_two_pi = 0.91893853320467274178;
    z -= 1.0;
    std::complex<double> x = coeff[0];
    for (int i = 1; i < 9; ++i) x += coeff[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + g + 0.5;
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace qmlf::detail
