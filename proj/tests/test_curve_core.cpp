#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoda/curve.hpp"
#include "hypertoda/error.hpp"
#include "hypertoda/polynomial.hpp"
#include "hypertoda/quadrature.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace hypertoda;

TEST_CASE("polynomial arithmetic and evaluation")
{
    const ComplexPolynomial p{1.0, -3.0, 0.0, 2.0};
    CHECK(p.degree() == 3);
    CHECK(std::abs(p(2.0) - Complex(11.0)) < 1e-14);
    const auto q = p * ComplexPolynomial{-1.0, 1.0};
    const auto [quot, rem] = divmod(q, ComplexPolynomial{-1.0, 1.0});
    CHECK(rem.max_abs_coeff() < 1e-14);
    CHECK((quot - p).max_abs_coeff() < 1e-14);
    CHECK(std::abs(p.derivative()(1.0) - Complex(3.0)) < 1e-14);
}

TEST_CASE("taylor coefficients match derivatives")
{
    const ComplexPolynomial p{0.5, 1.0, -2.0, 0.0, 1.0};
    const Complex x0(0.3, -0.7);
    const auto t = p.taylor_at(x0);
    CHECK(std::abs(t[0] - p(x0)) < 1e-14);
    CHECK(std::abs(t[1] - p.derivative()(x0)) < 1e-14);
    CHECK(std::abs(t[2] - 0.5 * p.derivative().derivative()(x0)) < 1e-14);
}

TEST_CASE("roots of a product are recovered")
{
    const std::vector<Complex> want{Complex(1, 1), Complex(-2, 0), Complex(0.5, -0.25), Complex(3, 2)};
    auto got = polynomial_roots(ComplexPolynomial::from_roots(want));
    auto w = want;
    sort_lex(got);
    sort_lex(w);
    for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(std::abs(got[i] - w[i]) < 1e-12);
    }
}

TEST_CASE("zero roots and a double root")
{
    const auto p = ComplexPolynomial::monomial(2) * ComplexPolynomial{-1.0, 0.0, 1.0};
    const auto r = polynomial_roots(p);
    CHECK(r.size() == 4);
    int zeros = 0;
    for (const auto z : r) {
        zeros += std::abs(z) < 1e-12 ? 1 : 0;
    }
    CHECK(zeros == 2);
}

TEST_CASE("curve construction and branch points")
{
    const HyperellipticCurve c(1, {0.0, -1.0, 0.0});
    const auto &e = c.branch_points();
    REQUIRE(e.size() == 3);
    CHECK(std::abs(e[0] + 1.0) < 1e-14);
    CHECK(std::abs(e[1]) < 1e-14);
    CHECK(std::abs(e[2] - 1.0) < 1e-14);
    CHECK(c.on_curve(c.lift(Complex(0.4, 0.9))));
}

TEST_CASE("bad curves are rejected")
{
    CHECK_THROWS_AS(HyperellipticCurve(1, {0.0, 1.0}), Error);
    try {
        HyperellipticCurve(1, {0.0, 0.0, 0.0});
        FAIL("expected DegenerateCurve");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::DegenerateCurve);
    }
}

TEST_CASE("y jet: first coefficient, closed-form second, and jet square")
{
    const HyperellipticCurve c(1, {0.0, -1.0, 0.0});
    const auto p = c.lift(2.0);
    const auto y = y_jet(c, p, 6);
    CHECK(std::abs(y[1] - oracle::df_e1(2.0) / (2.0 * p.y)) < 1e-14);
    CHECK(std::abs(y[2] - oracle::y_second_jet(2.0, p.y)) < 1e-14);

    const HyperellipticCurve c2(2, {0.3, -1.0, 0.0, 0.5, 0.0});
    const auto q = c2.lift(Complex(0.7, 0.4));
    const auto yj = y_jet(c2, q, 8);
    const auto fj = c2.f().taylor_at(q.x);
    for (int k = 0; k <= 8; ++k) {
        Complex sq{};
        for (int j = 0; j <= k; ++j) {
            sq += yj[j] * yj[k - j];
        }
        const Complex fk = k < static_cast<int>(fj.size()) ? fj[k] : Complex{};
        CHECK(std::abs(sq - fk) < 1e-12);
    }
    CHECK_THROWS_AS(y_jet(c, c.lift(1.0), 3), Error);
}

TEST_CASE("phi monomial basis ordering")
{
    // g = 2: 1, x, x^2, y, x^3, x y, ...
    CHECK(phi_exponents(2, 2).x_power == 2);
    CHECK(phi_exponents(2, 3).y_power == 1);
    CHECK(phi_exponents(2, 3).x_power == 0);
    CHECK(phi_exponents(2, 4).x_power == 3);
    CHECK(phi_exponents(2, 5).x_power == 1);
    CHECK(phi_exponents(2, 5).y_power == 1);
}

TEST_CASE("f12 is the confluent limit")
{
    const HyperellipticCurve c(2, {0.3, -1.0, 0.0, 0.5, 0.0});
    const auto p = c.lift(Complex(0.7, 0.4));
    const auto y2 = y_jet(c, p, 6);
    auto quotient = [&](Complex h) {
        Complex y_near{};
        Complex hp{1.0};
        for (const auto yk : y2) {
            y_near += yk * hp;
            hp *= h;
        }
        return (baker_f2(c, p.x, p.x + h) - 2.0 * p.y * y_near) / (h * h);
    };
    const Complex h(1e-4, 0.5e-4);
    const Complex lim = 0.5 * (quotient(h) + quotient(-h));
    CHECK(std::abs(lim - f12(c, p.x)) < 1e-6 * std::max(1.0, std::abs(lim)));
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly")
{
    const auto &q = gauss_legendre(16);
    double s = 0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        s += q.weights[i] * std::pow(q.nodes[i], 10);
    }
    CHECK(std::abs(s - 2.0 / 11.0) < 1e-14);
}

TEST_CASE("vandermonde sign convention")
{
    const std::vector<Complex> xs{1.0, 2.0, 4.0};
    CHECK(std::abs(vandermonde(xs) - Complex(6.0)) < 1e-14);
}
