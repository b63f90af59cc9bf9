#pragma once

// The Mittag-Leffler family: the classical reference series, the
// q-analogues, the extended function E_{eta,kappa}^{(sigma;c)}(u;q), and
// the closed forms of its integral, derivative and transform identities.

#include <vector>

#include "qmlf/qcore.hpp"

namespace qmlf {

// Parameters of the classical (Prabhakar) series
//   sum_m (sigma)_m u^m / (Gamma(eta m + kappa) m!),
// which reduces to the two-parameter function at sigma = 1 and further to
// the original series at kappa = 1. Used as the q -> 1 reference oracle.
struct ClassicalMLParams {
    Complex eta{1.0, 0.0};
    Complex kappa{1.0, 0.0};
    Complex sigma{1.0, 0.0};

    void validate() const; // Re(eta) > 0, Re(kappa) > 0, Re(sigma) > 0
};

// Parameters of the extended function. eta is restricted to positive reals
// so that (1-q)^-eta is a real convergence radius.
struct ExtendedMLParams {
    double eta = 1.0;
    Complex kappa{1.0, 0.0};
    Complex sigma{1.0, 0.0};
    Complex c{2.0, 0.0};

    void validate() const; // eta > 0, Re(kappa) > 0, Re(c) > Re(sigma) > 0
};

EvalResult ml_classical(Complex u, const ClassicalMLParams& p,
                        const Truncation& trunc = {});

// sum_m u^m / Gamma_q(eta m + kappa), |u| < (1-q)^-eta.
EvalResult q_mittag_leffler(Complex u, double eta, Complex kappa, QBase q,
                            const Truncation& trunc = {});

// sum_m (q^sigma;q)_m u^m / ((q;q)_m Gamma_q(eta m + kappa)).
EvalResult q_ml_prabhakar(Complex u, double eta, Complex kappa, Complex sigma,
                          QBase q, const Truncation& trunc = {});

// The common value of (q^c;q)_m / (q^sigma;q)_m and
// B_q(sigma, c-sigma) / B_q(sigma+m, c-sigma), evaluated through the beta
// form. Requires Re(c) > Re(sigma) > 0.
Complex beta_ratio(Complex sigma, Complex c, int m, QBase q);

// The extended function: series coefficients
//   [B_q(sigma+m, c-sigma)/B_q(sigma, c-sigma)] (q^c;q)_m / (q;q)_m,
// in which the beta ratio equals (q^sigma;q)_m / (q^c;q)_m, so the (q^c;q)_m
// factors cancel and the coefficient reduces to (q^sigma;q)_m / (q;q)_m.
// The series is summed in that cancelled form; the beta-function route is
// exercised as an independent path by the test suite. Converges for
// |u| < (1-q)^-eta (DomainError outside). Optionally records per-term
// magnitudes for convergence diagnostics.
EvalResult q_ml_extended(Complex u, const ExtendedMLParams& p, QBase q,
                         const Truncation& trunc = {},
                         std::vector<double>* term_magnitudes = nullptr);

// (1-q)^-eta, the radius of absolute convergence.
double convergence_radius(double eta, QBase q);

// Right-hand side of the recurrence satisfied by the extended function:
//   E_{eta,kappa}^{(sigma+1;c+1)}(u;q) - u q^sigma E_{eta,eta+kappa}^{(sigma+1;c+1)}(u;q),
// equal to E_{eta,kappa}^{(sigma;c)}(u;q) inside the disk. The factor is
// q^sigma: splitting the leading coefficient factor 1 - q^(sigma) as
// (1 - q^(sigma+m)) - q^sigma (1 - q^m) is what closes the identity.
EvalResult recurrence_rhs(Complex u, const ExtendedMLParams& p, QBase q,
                          const Truncation& trunc = {});

// Jackson-quadrature evaluation of the integral representation
//   (1/B_q(sigma, c-sigma)) * integral_0^1 t^(sigma-1)
//       [(tq;q)_inf / (t q^(c-sigma);q)_inf] E^(c)_{eta,kappa}(t u; q) d_q t,
// where E^(c) is the q-Prabhakar function with upper parameter c. Agrees
// with q_ml_extended within quadrature tolerance.
EvalResult integral_representation(Complex u, const ExtendedMLParams& p,
                                   QBase q, const Truncation& trunc = {});

// Closed form of the m-fold q-derivative
//   D_q^m [u^(kappa-1) E^{(sigma;c)}_{eta,kappa}(lambda u^eta; q)]
//     = u^(kappa-m-1) E^{(sigma;c)}_{eta,kappa-m}(lambda u^eta; q),
// with 1/Gamma_q taken as zero at nonpositive integer arguments, so the
// right-hand side is evaluable for every m >= 1. Requires u != 0.
EvalResult derivative_closed_form(Complex u, Complex lambda,
                                  const ExtendedMLParams& p, int m, QBase q,
                                  const Truncation& trunc = {});

// Series value of the beta-weighted q-integral
//   integral_0^1 u^(xi-1) (1-qu)^((zeta-1)) E^{(sigma;c)}_{eta,kappa}(x u^rho; q) d_q u
//     = sum_m [coefficient_m] x^m B_q(xi + rho m, zeta) / Gamma_q(eta m + kappa).
// At rho = eta, xi = kappa it collapses to Gamma_q(zeta) E^{(sigma;c)}_{eta,kappa+zeta}(x;q).
EvalResult beta_weighted_integral(Complex x, Complex xi, Complex zeta,
                                  double rho, const ExtendedMLParams& p,
                                  QBase q, const Truncation& trunc = {});

// Closed form of the q-Laplace transform of u -> E^{(sigma;c)}_{eta,kappa}(x u^rho; q):
//   (1/s) sum_m [coefficient_m] Gamma_q(1 + rho m) / Gamma_q(eta m + kappa)
//         ((1-q)^rho x / s^rho)^m,
// requiring Re(s) > 0 and |x| (1-q)^eta < |s^rho|.
EvalResult laplace_closed_form(Complex x, double rho, Complex s,
                               const ExtendedMLParams& p, QBase q,
                               const Truncation& trunc = {});

} // namespace qmlf
