#pragma once

// Functional q-operators acting on caller-supplied evaluation callbacks:
// the q-difference operator, the Jackson q-integral on [0, a], and the
// q-Laplace transform in its series form.

#include <functional>

#include "qmlf/qcore.hpp"

namespace qmlf {

// Evaluation contract: must be defined at every sample point u q^m the
// operators request, and deterministic for a fixed input.
using ScalarFunction = std::function<Complex(Complex)>;

// m-fold q-difference operator,
//   D_q f(u) = (f(u) - f(uq)) / (u (1 - q)),
// iterated m times. Exact given exact f evaluations. At u = 0 the limit
// definition applies; it is evaluated by polynomial extrapolation of D_q f
// on the geometric ladder {h, hq, hq^2} with h = 1e-6.
Complex q_derivative(const ScalarFunction& f, Complex u, QBase q, int m = 1);

// Jackson q-integral over [0, a]:
//   integral_0^a f(t) d_q t = a (1 - q) sum_{m>=0} q^m f(a q^m),
// truncated when |q^m f(a q^m)| stays below abs_tol for three consecutive
// terms; tail_estimate = last term bound * q / (1 - q).
EvalResult jackson_integral(const ScalarFunction& f, double a, QBase q,
                            const Truncation& trunc = {});

// q-Laplace transform, series form:
//   qL_s{f} = ((q;q)_inf / s) sum_{j>=0} q^j f(s^-1 q^j) / (q;q)_j,
// requiring Re(s) > 0. Same three-small-terms truncation rule.
EvalResult q_laplace(const ScalarFunction& f, Complex s, QBase q,
                     const Truncation& trunc = {});

} // namespace qmlf
