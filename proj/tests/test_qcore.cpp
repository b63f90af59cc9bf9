#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qmlf/qcore.hpp"

using namespace qmlf;

namespace {

double rel_err(Complex a, Complex b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

std::mt19937_64 test_rng(42);

double uniform(double lo, double hi) {
    double x = static_cast<double>(test_rng() >> 11) * 0x1.0p-53;
    return lo + x * (hi - lo);
}

} // namespace

TEST_CASE("QBase rejects values outside (0,1)") {
    CHECK_THROWS_AS(QBase(0.0), InvalidArgument);
    CHECK_THROWS_AS(QBase(1.0), InvalidArgument);
    CHECK_THROWS_AS(QBase(-0.3), InvalidArgument);
    CHECK_THROWS_AS(QBase(1.7), InvalidArgument);
    CHECK(QBase(0.5).value() == 0.5);
}

TEST_CASE("Truncation validation") {
    Truncation t;
    CHECK_NOTHROW(t.validate());
    t.abs_tol = 0.0;
    CHECK_THROWS_AS(t.validate(), InvalidArgument);
    t = Truncation{};
    t.max_terms = 0;
    CHECK_THROWS_AS(t.validate(), InvalidArgument);
}

TEST_CASE("q_number basic values") {
    QBase q(0.5);
    CHECK(std::abs(q_number(Complex(0.0, 0.0), q)) < 1e-15);
    CHECK(std::abs(q_number(Complex(1.0, 0.0), q) - 1.0) < 1e-15);
    CHECK(std::abs(q_number(Complex(2.0, 0.0), q) - 1.5) < 1e-15);
    // [u]_q is real for real u, any q.
    for (int i = 0; i < 20; ++i) {
        QBase qr(uniform(0.05, 0.95));
        Complex v = q_number(Complex(uniform(0.0, 6.0), 0.0), qr);
        CHECK(std::abs(v.imag()) < 1e-14);
    }
}

TEST_CASE("q_pochhammer finite products") {
    QBase q(0.5);
    CHECK(q_pochhammer(Complex(7.3, 1.0), q, 0).value == Complex(1.0, 0.0));
    CHECK(std::abs(q_pochhammer(Complex(2.0, 0.0), q, 2).value) < 1e-15);
    CHECK(std::abs(q_pochhammer(Complex(0.5, 0.0), q, 3).value - 0.328125) < 1e-15);
    CHECK_THROWS_AS(q_pochhammer(Complex(0.5, 0.0), q, -1), InvalidArgument);
}

TEST_CASE("q_pochhammer splitting (lambda;q)_{m+n} = (lambda;q)_m (lambda q^m;q)_n") {
    for (int i = 0; i < 50; ++i) {
        QBase q(uniform(0.1, 0.9));
        Complex lambda(uniform(-2.0, 2.0), uniform(-1.0, 1.0));
        int m = static_cast<int>(uniform(0, 20));
        int n = static_cast<int>(uniform(0, 20));
        Complex whole = q_pochhammer(lambda, q, m + n).value;
        Complex split =
            q_pochhammer(lambda, q, m).value *
            q_pochhammer(lambda * std::pow(q.value(), m), q, n).value;
        CHECK(std::abs(whole - split) <= 1e-13 * std::max(1.0, std::abs(whole)));
    }
}

TEST_CASE("q_pochhammer infinite product matches direct iteration oracle") {
    QBase q(0.5);
    // Oracle: multiply factors until they stop changing the product.
    Complex oracle{1.0, 0.0};
    Complex cur{0.5, 0.0};
    for (int i = 0; i < 200; ++i) {
        oracle *= (1.0 - cur);
        cur *= 0.5;
    }
    EvalResult r = q_pochhammer(Complex(0.5, 0.0), q, infinite_order);
    CHECK(r.converged);
    CHECK(std::abs(r.value - oracle) < 1e-13);
    CHECK(std::abs(r.value - 0.2887880951) < 1e-9);
}

TEST_CASE("finite order agrees with the ratio of infinite products") {
    for (int i = 0; i < 40; ++i) {
        QBase q(uniform(0.1, 0.9));
        Complex lambda = Complex(uniform(-0.95, 0.95), uniform(-0.3, 0.3));
        int m = static_cast<int>(uniform(0, 15));
        Complex finite = q_pochhammer(lambda, q, m).value;
        Complex shifted = lambda * std::pow(q.value(), m);
        Complex ratio = q_pochhammer(lambda, q, infinite_order).value /
                        q_pochhammer(shifted, q, infinite_order).value;
        CHECK(std::abs(finite - ratio) < 1e-12 * std::max(1.0, std::abs(finite)));
    }
}

TEST_CASE("complex-order q_pochhammer extends the integer case") {
    QBase q(0.4);
    Complex lambda(0.3, 0.1);
    Complex via_int = q_pochhammer(lambda, q, 3).value;
    Complex via_cplx = q_pochhammer(lambda, q, Complex(3.0, 0.0)).value;
    CHECK(std::abs(via_int - via_cplx) < 1e-12);
}

TEST_CASE("complex-order q_pochhammer reports a vanishing denominator") {
    QBase q(0.5);
    // lambda q^eta = 1 puts an exact zero in the denominator product.
    CHECK_THROWS_AS(q_pochhammer(Complex(2.0, 0.0), q, Complex(1.0, 0.0)),
                    DivisionByZero);
}

TEST_CASE("q_power_difference") {
    QBase q(0.5);
    CHECK(q_power_difference(3.7, 9.1, q, 0) == Complex(1.0, 0.0));
    CHECK(std::abs(q_power_difference(1.0, 0.0, q, 3) - 1.0) < 1e-15);
    CHECK(std::abs(q_power_difference(2.0, 1.0, q, 2) - 1.5) < 1e-15);
    // Real order reduces to the integer product at integral values.
    Complex integer_form = q_power_difference(2.0, 0.7, q, 3);
    Complex real_form = q_power_difference(2.0, 0.7, q, 3.0);
    CHECK(std::abs(integer_form - real_form) < 1e-12);
    CHECK_THROWS_AS(q_power_difference(0.0, 1.0, q, 0.5), InvalidArgument);
}

TEST_CASE("q_binomial values and symmetry") {
    QBase q(0.5);
    CHECK(q_binomial(Complex(4.2, 0.3), 0, q) == Complex(1.0, 0.0));
    CHECK(std::abs(q_binomial(Complex(2.0, 0.0), 1, q) - 1.5) < 1e-15);
    for (int i = 0; i < 10; ++i) {
        QBase qr(uniform(0.1, 0.9));
        Complex lhs = q_binomial(Complex(2.0, 0.0), 1, qr);
        Complex rhs = q_number(Complex(2.0, 0.0), qr);
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
    // binom(s, t) = binom(s, s-t) for integers 0 <= t <= s <= 15.
    QBase qs(0.37);
    for (int s = 0; s <= 15; ++s) {
        for (int t = 0; t <= s; ++t) {
            Complex a = q_binomial(Complex(s, 0.0), t, qs);
            Complex b = q_binomial(Complex(s, 0.0), s - t, qs);
            CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(a)));
        }
    }
    // Integer tau matches the (q;q) factorial ratio.
    for (int s = 1; s <= 10; ++s) {
        for (int t = 0; t <= s; ++t) {
            Complex lhs = q_binomial(Complex(s, 0.0), t, qs);
            Complex rhs = q_pochhammer(Complex(qs.value(), 0.0), qs, s).value /
                          (q_pochhammer(Complex(qs.value(), 0.0), qs, t).value *
                           q_pochhammer(Complex(qs.value(), 0.0), qs, s - t).value);
            CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("q_gamma frozen values and poles") {
    CHECK(std::abs(q_gamma(Complex(1.0, 0.0), QBase(0.3)) - 1.0) < 1e-13);
    CHECK(std::abs(q_gamma(Complex(2.0, 0.0), QBase(0.7)) - 1.0) < 1e-13);
    CHECK(std::abs(q_gamma(Complex(3.0, 0.0), QBase(0.5)) - 1.5) < 1e-13);
    CHECK_THROWS_AS(q_gamma(Complex(0.0, 0.0), QBase(0.5)), PoleError);
    CHECK_THROWS_AS(q_gamma(Complex(-2.0, 0.0), QBase(0.5)), PoleError);
    CHECK_NOTHROW(q_gamma(Complex(-1.5, 0.0), QBase(0.5)));
}

TEST_CASE("q_gamma functional equation") {
    for (int i = 0; i < 200; ++i) {
        QBase q(0.1 * (1 + static_cast<int>(uniform(0, 9))));
        double u = uniform(1e-3, 5.0);
        Complex lhs = q_gamma(Complex(u + 1.0, 0.0), q);
        Complex rhs = q_number(Complex(u, 0.0), q) * q_gamma(Complex(u, 0.0), q);
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("inv_q_gamma vanishes at the poles and inverts q_gamma elsewhere") {
    QBase q(0.45);
    CHECK(std::abs(inv_q_gamma(Complex(0.0, 0.0), q)) < 1e-14);
    CHECK(std::abs(inv_q_gamma(Complex(-3.0, 0.0), q)) < 1e-14);
    for (int i = 0; i < 20; ++i) {
        Complex u(uniform(0.2, 6.0), uniform(-1.0, 1.0));
        Complex prod = inv_q_gamma(u, q) * q_gamma(u, q);
        CHECK(std::abs(prod - 1.0) < 1e-12);
    }
}

TEST_CASE("q_beta values and symmetry") {
    CHECK(std::abs(q_beta(Complex(1.0, 0.0), Complex(1.0, 0.0), QBase(0.62)) - 1.0) <
          1e-13);
    CHECK(std::abs(q_beta(Complex(2.0, 0.0), Complex(2.0, 0.0), QBase(0.5)) -
                   1.0 / 2.625) < 1e-12);
    for (int i = 0; i < 30; ++i) {
        QBase q(uniform(0.1, 0.9));
        Complex a(uniform(0.2, 3.0), 0.0);
        Complex b(uniform(0.2, 3.0), 0.0);
        CHECK(rel_err(q_beta(a, b, q), q_beta(b, a, q)) < 1e-13);
    }
    CHECK_THROWS_AS(q_beta(Complex(-0.5, 0.0), Complex(1.0, 0.0), QBase(0.5)),
                    InvalidArgument);
}

TEST_CASE("q_exponential values, duality, product forms") {
    QBase q(0.5);
    CHECK(std::abs(q_exponential(Complex(0.0, 0.0), q, ExpKind::big).value - 1.0) <
          1e-14);
    CHECK(std::abs(q_exponential(Complex(0.0, 0.0), q, ExpKind::small).value - 1.0) <
          1e-14);
    CHECK_THROWS_AS(q_exponential(Complex(1.0, 0.0), q, ExpKind::small),
                    DomainError);

    // e_q(u) E_q(-u) = 1 for |u| < 1.
    for (int i = 0; i < 40; ++i) {
        QBase qr(uniform(0.1, 0.9));
        Complex u = std::polar(uniform(0.0, 0.9), uniform(0.0, 6.28));
        Complex prod = q_exponential(u, qr, ExpKind::small).value *
                       q_exponential(-u, qr, ExpKind::big).value;
        CHECK(std::abs(prod - 1.0) < 1e-10);
    }

    // Series forms match the product closed forms.
    for (int i = 0; i < 40; ++i) {
        QBase qr(uniform(0.1, 0.9));
        Complex u = std::polar(uniform(0.0, 2.5), uniform(0.0, 6.28));
        Complex big = q_exponential(u, qr, ExpKind::big).value;
        Complex prod = q_pochhammer(-u, qr, infinite_order).value;
        CHECK(std::abs(big - prod) <= 1e-10 * std::max(1.0, std::abs(prod)));
        Complex us = std::polar(uniform(0.0, 0.9), uniform(0.0, 6.28));
        Complex small = q_exponential(us, qr, ExpKind::small).value;
        Complex prod_inv = 1.0 / q_pochhammer(us, qr, infinite_order).value;
        CHECK(std::abs(small - prod_inv) <= 1e-10 * std::max(1.0, std::abs(prod_inv)));
    }

    // Frozen spot value: E_q(0.5) at q = 0.5 equals (-0.5; 0.5)_inf.
    Complex spot = q_exponential(Complex(0.5, 0.0), q, ExpKind::big).value;
    Complex spot_prod = q_pochhammer(Complex(-0.5, 0.0), q, infinite_order).value;
    CHECK(std::abs(spot - spot_prod) < 1e-12);
}

TEST_CASE("evaluations are deterministic") {
    QBase q(0.731);
    EvalResult a = q_exponential(Complex(0.4, 0.2), q, ExpKind::big);
    EvalResult b = q_exponential(Complex(0.4, 0.2), q, ExpKind::big);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
    CHECK(a.terms_used == b.terms_used);
    CHECK(a.tail_estimate == b.tail_estimate);
}
