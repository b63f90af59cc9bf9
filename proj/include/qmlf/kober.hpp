#pragma once

// Kober-type fractional q-integral and q-derivative operators, realized
// directly by quadrature and termwise through their power-function images,
// and applied termwise to the extended q-Mittag-Leffler series.

#include "qmlf/qcore.hpp"
#include "qmlf/qml.hpp"
#include "qmlf/qops.hpp"

namespace qmlf {

struct KoberParams {
    Complex nu{0.0, 0.0};
    Complex mu{1.0, 0.0};
};

enum class KoberKind { integral, derivative };

// Direct quadrature of the fractional q-integral
//   (I_q^{nu,mu} f)(u) = (u^(-nu-mu) / Gamma_q(mu))
//       * integral_0^u (u - tq)^((mu-1)) t^nu f(t) d_q t,
// with the kernel evaluated as u^(mu-1) (tq/u; q)_{mu-1} through
// complex-order shifted factorials. Requires Re(mu) > 0 and, for the
// quadrature to converge, Re(nu) > -1.
EvalResult kober_integral_direct(const ScalarFunction& f, double u,
                                 KoberParams k, QBase q,
                                 const Truncation& trunc = {});

// Image coefficient of the power u^m:
//   integral kind:   Gamma_q(nu + m + 1) / Gamma_q(nu + mu + m + 1)
//   derivative kind: the reciprocal ratio.
// Throws PoleError when either gamma argument is a nonpositive integer.
Complex kober_image_power(int m, KoberParams k, QBase q, KoberKind kind);

// Termwise image of the extended function under I_q^{nu,mu}: every series
// term picks up the integral-kind power image.
EvalResult kober_I_extended(Complex u, const ExtendedMLParams& p,
                            KoberParams k, QBase q,
                            const Truncation& trunc = {});

// Termwise image under the Kober q-derivative D_q^{nu,mu} (the
// derivative-kind power image per term); exact inverse of kober_I_extended
// for the same (nu, mu).
EvalResult kober_D_extended(Complex u, const ExtendedMLParams& p,
                            KoberParams k, QBase q,
                            const Truncation& trunc = {});

} // namespace qmlf
