#pragma once

// Scalar q-calculus primitives: q-numbers, q-shifted factorials, q-power
// differences, q-binomials, q-gamma/q-beta, and the two q-exponentials.
// All arithmetic is double-precision complex; q is real with 0 < q < 1.

#include <complex>
#include <cstddef>

#include "qmlf/errors.hpp"

namespace qmlf {

using Complex = std::complex<double>;

// The deformation parameter. Construction enforces 0 < q < 1 strictly.
class QBase {
  public:
    explicit QBase(double q);
    double value() const { return q_; }

  private:
    double q_;
};

// Truncation policy for every infinite series, product and q-integral.
// abs_tol bounds the accepted tail estimate, rel_tol bounds the last term
// relative to the running sum, max_terms is a hard budget.
struct Truncation {
    double abs_tol = 1e-14;
    double rel_tol = 1e-14;
    std::size_t max_terms = 10000;

    void validate() const;
};

// Value of a truncated evaluation plus its convergence diagnostics.
// converged == true implies tail_estimate <= abs_tol of the governing policy.
struct EvalResult {
    Complex value{0.0, 0.0};
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;
};

enum class ExpKind { big, small };

// Tag type selecting the infinite q-shifted factorial (lambda; q)_inf.
struct InfiniteOrder {};
inline constexpr InfiniteOrder infinite_order{};

// [u]_q = (1 - q^u) / (1 - q), with q^u on the principal branch.
Complex q_number(Complex u, QBase q);

// (lambda; q)_m, the exact m-factor product. Always converged, tail 0.
EvalResult q_pochhammer(Complex lambda, QBase q, int order);

// (lambda; q)_inf, truncated once the current factor satisfies
// |lambda q^i| < abs_tol; tail_estimate = |lambda| q^(i+1) / (1 - q).
EvalResult q_pochhammer(Complex lambda, QBase q, InfiniteOrder,
                        const Truncation& trunc = {});

// (lambda; q)_eta = (lambda; q)_inf / (lambda q^eta; q)_inf for complex eta.
// Throws DivisionByZero if the denominator product vanishes.
EvalResult q_pochhammer(Complex lambda, QBase q, Complex order,
                        const Truncation& trunc = {});

// (s - t)^(m) = prod_{i<m} (s - t q^i).
Complex q_power_difference(double s, double t, QBase q, int order);

// (s - t)^(tau) = s^tau (t/s; q)_tau for real tau; requires s != 0.
Complex q_power_difference(double s, double t, QBase q, double order);

// Generalized q-binomial coefficient for complex tau and integer m >= 0,
// evaluated as prod_{i<m} (1 - q^(tau-i)) / (1 - q^(i+1)); for integer
// tau = s >= m this equals (q;q)_s / ((q;q)_m (q;q)_{s-m}).
Complex q_binomial(Complex tau, int m, QBase q);

// Gamma_q(u) = (q;q)_inf / (q^u;q)_inf * (1-q)^(1-u).
// Throws PoleError when u is a nonpositive integer (|u - round(u)| < 1e-12).
Complex q_gamma(Complex u, QBase q);

// 1 / Gamma_q(u) = (q^u;q)_inf (1-q)^(u-1) / (q;q)_inf.
// Entire in u: evaluates to 0 at the poles of Gamma_q instead of throwing.
Complex inv_q_gamma(Complex u, QBase q);

// B_q(eta, kappa) = Gamma_q(eta) Gamma_q(kappa) / Gamma_q(eta + kappa),
// for Re(eta) > 0, Re(kappa) > 0.
Complex q_beta(Complex eta, Complex kappa, QBase q);

// kind == big:   E_q^u = sum q^C(m,2) u^m / (q;q)_m = (-u; q)_inf  (entire)
// kind == small: e_q^u = sum u^m / (q;q)_m = 1 / (u; q)_inf,  |u| < 1
EvalResult q_exponential(Complex u, QBase q, ExpKind kind,
                         const Truncation& trunc = {});

namespace detail {

// log (lambda; q)_inf = sum_i log(1 - lambda q^i), iterated to machine
// precision regardless of any user truncation policy. Everything gamma-like
// is computed from this sum: near q = 1 the products themselves fall below
// the double underflow threshold while their ratios stay O(1).
Complex log_pochhammer_inf(Complex lambda, double q);

// exp(log_pochhammer_inf): the product itself where its scale is tame.
Complex pochhammer_inf_eps(Complex lambda, double q);

// Gamma_q(a) / Gamma_q(a + shift) = (1-q)^shift (q^(a+shift);q)_inf / (q^a;q)_inf.
// Well defined whenever a is not a nonpositive integer; stays O(1) for large
// Re(a), where the direct gammas would over/underflow.
Complex q_gamma_ratio(Complex a, Complex shift, QBase q);

} // namespace detail

} // namespace qmlf
