#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qmlf/kober.hpp"

using namespace qmlf;

namespace {

std::mt19937_64 test_rng(99);

double uniform(double lo, double hi) {
    double x = static_cast<double>(test_rng() >> 11) * 0x1.0p-53;
    return lo + x * (hi - lo);
}

} // namespace

TEST_CASE("kober_image_power values") {
    QBase q(0.5);
    KoberParams k{Complex(0.0, 0.0), Complex(1.0, 0.0)};
    // Gamma_q(2)/Gamma_q(3) = 1/[2]_q
    Complex got = kober_image_power(1, k, q, KoberKind::integral);
    CHECK(std::abs(got - 1.0 / 1.5) < 1e-13);

    // mu = 0 boundary: identical gamma arguments, ratio 1.
    KoberParams k0{Complex(0.7, 0.0), Complex(0.0, 0.0)};
    CHECK(std::abs(kober_image_power(3, k0, q, KoberKind::integral) - 1.0) < 1e-13);

    // integral and derivative kinds are exact reciprocals.
    for (int i = 0; i < 40; ++i) {
        KoberParams kr{Complex(uniform(0.0, 2.0), 0.0),
                       Complex(uniform(0.1, 2.0), 0.0)};
        QBase qr(uniform(0.15, 0.9));
        int m = static_cast<int>(uniform(0, 8));
        Complex prod = kober_image_power(m, kr, qr, KoberKind::integral) *
                       kober_image_power(m, kr, qr, KoberKind::derivative);
        CHECK(std::abs(prod - 1.0) < 1e-12);
    }

    KoberParams kp{Complex(-2.0, 0.0), Complex(0.5, 0.0)};
    CHECK_THROWS_AS(kober_image_power(1, kp, q, KoberKind::integral), PoleError);
}

TEST_CASE("kober_integral_direct on monomials reproduces the image ratio") {
    for (int i = 0; i < 25; ++i) {
        KoberParams k{Complex(uniform(0.0, 2.0), 0.0),
                      Complex(uniform(0.3, 2.0), 0.0)};
        QBase q(uniform(0.15, 0.8));
        int m = static_cast<int>(uniform(0, 6));
        double u = uniform(0.5, 2.0);
        auto f = [m](Complex t) { return std::pow(t, m); };
        Complex got = kober_integral_direct(f, u, k, q).value /
                      std::pow(u, static_cast<double>(m));
        Complex want = kober_image_power(m, k, q, KoberKind::integral);
        CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("kober_integral_direct trivia") {
    QBase q(0.5);
    KoberParams k{Complex(0.5, 0.0), Complex(1.2, 0.0)};
    auto zero = [](Complex) { return Complex(0.0, 0.0); };
    CHECK(std::abs(kober_integral_direct(zero, 1.0, k, q).value) < 1e-14);
    auto one = [](Complex) { return Complex(1.0, 0.0); };
    Complex got = kober_integral_direct(one, 1.0, k, q).value;
    Complex want = kober_image_power(0, k, q, KoberKind::integral);
    CHECK(std::abs(got - want) < 1e-9);
    CHECK_THROWS_AS(kober_integral_direct(one, -1.0, k, q), InvalidArgument);
    KoberParams bad{Complex(0.0, 0.0), Complex(-0.5, 0.0)};
    CHECK_THROWS_AS(kober_integral_direct(one, 1.0, bad, q), InvalidArgument);
}

TEST_CASE("kober_integral_direct is linear") {
    QBase q(0.4);
    KoberParams k{Complex(0.3, 0.0), Complex(0.8, 0.0)};
    auto f = [](Complex t) { return t * t + 0.5; };
    auto g = [](Complex t) { return 2.0 * t; };
    Complex combined = kober_integral_direct(
        [&](Complex t) { return 3.0 * f(t) - 1.5 * g(t); }, 1.2, k, q).value;
    Complex sep = 3.0 * kober_integral_direct(f, 1.2, k, q).value -
                  1.5 * kober_integral_direct(g, 1.2, k, q).value;
    CHECK(std::abs(combined - sep) < 1e-11);
}

TEST_CASE("kober_I_extended at u = 0") {
    QBase q(0.5);
    KoberParams k{Complex(0.4, 0.0), Complex(0.9, 0.0)};
    ExtendedMLParams p;
    p.eta = 1.2;
    p.kappa = Complex(1.4, 0.0);
    p.sigma = Complex(0.7, 0.0);
    p.c = Complex(1.5, 0.0);
    Complex got = kober_I_extended(Complex(0.0, 0.0), p, k, q).value;
    Complex want = inv_q_gamma(p.kappa, q) *
                   kober_image_power(0, k, q, KoberKind::integral);
    CHECK(std::abs(got - want) < 1e-13);
    Complex gotd = kober_D_extended(Complex(0.0, 0.0), p, k, q).value;
    Complex wantd = inv_q_gamma(p.kappa, q) *
                    kober_image_power(0, k, q, KoberKind::derivative);
    CHECK(std::abs(gotd - wantd) < 1e-13);
}

TEST_CASE("integral image of the shifted function collapses to a scaled q-Prabhakar") {
    for (int i = 0; i < 25; ++i) {
        KoberParams k{Complex(uniform(0.0, 1.5), 0.0),
                      Complex(uniform(0.3, 1.5), 0.0)};
        QBase q(uniform(0.15, 0.9));
        ExtendedMLParams p;
        p.eta = uniform(0.4, 2.0);
        p.kappa = Complex(uniform(0.4, 2.5), 0.0);
        p.sigma = k.nu + k.mu + 1.0;
        p.c = p.sigma + uniform(0.3, 1.5);
        Complex u = std::polar(
            uniform(0.0, 0.8) * convergence_radius(p.eta, q), uniform(0.0, 6.28));
        Complex lhs = kober_I_extended(u, p, k, q).value;
        Complex rhs = kober_image_power(0, k, q, KoberKind::integral) *
                      q_ml_prabhakar(u, p.eta, p.kappa, k.nu + 1.0, q).value;
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("derivative image of the shifted function collapses to a scaled q-Prabhakar") {
    for (int i = 0; i < 25; ++i) {
        KoberParams k{Complex(uniform(0.0, 1.5), 0.0),
                      Complex(uniform(0.3, 1.5), 0.0)};
        QBase q(uniform(0.15, 0.9));
        ExtendedMLParams p;
        p.eta = uniform(0.4, 2.0);
        p.kappa = Complex(uniform(0.4, 2.5), 0.0);
        p.sigma = k.nu + 1.0;
        p.c = p.sigma + uniform(0.3, 1.5);
        Complex u = std::polar(
            uniform(0.0, 0.8) * convergence_radius(p.eta, q), uniform(0.0, 6.28));
        Complex lhs = kober_D_extended(u, p, k, q).value;
        Complex rhs = kober_image_power(0, k, q, KoberKind::derivative) *
                      q_ml_prabhakar(u, p.eta, p.kappa, k.nu + k.mu + 1.0, q).value;
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("termwise images invert each other on finite power series") {
    for (int i = 0; i < 30; ++i) {
        KoberParams k{Complex(uniform(0.0, 2.0), 0.0),
                      Complex(uniform(0.3, 2.0), 0.0)};
        QBase q(uniform(0.15, 0.9));
        Complex u = std::polar(uniform(0.0, 1.0), uniform(0.0, 6.28));
        Complex plain{0.0, 0.0}, roundtrip{0.0, 0.0}, upow{1.0, 0.0};
        for (int m = 0; m <= 20; ++m) {
            Complex a(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
            Complex both = kober_image_power(m, k, q, KoberKind::integral) *
                           kober_image_power(m, k, q, KoberKind::derivative);
            plain += a * upow;
            roundtrip += a * both * upow;
            upow *= u;
        }
        CHECK(std::abs(plain - roundtrip) <= 1e-11 * std::max(1.0, std::abs(plain)));
    }
}

TEST_CASE("image coefficients compose as a semigroup in mu") {
    // I^{nu,mu1} then I^{nu+mu1,mu2} equals I^{nu,mu1+mu2} termwise.
    for (int i = 0; i < 30; ++i) {
        QBase q(uniform(0.15, 0.9));
        Complex nu(uniform(0.0, 2.0), 0.0);
        Complex mu1(uniform(0.2, 1.5), 0.0);
        Complex mu2(uniform(0.2, 1.5), 0.0);
        int m = static_cast<int>(uniform(0, 10));
        Complex first = kober_image_power(m, {nu, mu1}, q, KoberKind::integral);
        Complex second =
            kober_image_power(m, {nu + mu1, mu2}, q, KoberKind::integral);
        Complex fused =
            kober_image_power(m, {nu, mu1 + mu2}, q, KoberKind::integral);
        CHECK(std::abs(first * second - fused) <=
              1e-12 * std::max(1.0, std::abs(fused)));
    }
}
