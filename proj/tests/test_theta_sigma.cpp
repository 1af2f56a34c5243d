#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoda/addition.hpp"
#include "hypertoda/sampling.hpp"
#include "hypertoda/sigma.hpp"
#include "oracles.hpp"

using namespace hypertoda;
using Eigen::VectorXcd;

namespace
{

const SigmaContext &ctx1()
{
    static const SigmaContext c = make_sigma_context(HyperellipticCurve(1, {0.0, -1.0, 0.0}));
    return c;
}

const SigmaContext &ctx2()
{
    static const SigmaContext c = make_sigma_context(HyperellipticCurve(2, {1.0, 0.0, 0.0, 0.0, 0.0}));
    return c;
}

VectorXcd vec(std::initializer_list<Complex> xs)
{
    VectorXcd v(static_cast<Eigen::Index>(xs.size()));
    int i = 0;
    for (const auto x : xs) {
        v[i++] = x;
    }
    return v;
}

} // namespace

TEST_CASE("theta constant at tau = i")
{
    Eigen::MatrixXcd T(1, 1);
    T(0, 0) = Complex(0, 1);
    const auto r = theta_char(Characteristics::zero(1), vec({0.0}), T, truncation_radius(T, 1e-15));
    CHECK(std::abs(r.value - oracle::theta3_at_i()) < 1e-14);
}

TEST_CASE("theta: periodicity and odd characteristic")
{
    Eigen::MatrixXcd T(2, 2);
    T << Complex(0.1, 1.2), Complex(0.3, 0.2), Complex(0.3, 0.2), Complex(-0.2, 0.9);
    const int R = truncation_radius(T, 1e-15);
    const auto z = vec({Complex(0.2, 0.1), Complex(-0.3, 0.05)});
    VectorXcd z1 = z;
    z1[0] += 1.0;
    const auto zero = Characteristics::zero(2);
    CHECK(std::abs(theta_char(zero, z, T, R).value - theta_char(zero, z1, T, R).value) < 1e-13);

    Characteristics odd;
    odd.a = Eigen::Vector2d(0.5, 0.0);
    odd.b = Eigen::Vector2d(0.5, 0.0);
    CHECK(odd.is_odd());
    CHECK(std::abs(theta_char(odd, VectorXcd::Zero(2), T, R).value) < 1e-14);
}

TEST_CASE("Riemann characteristics")
{
    const auto &d1 = ctx1().delta;
    CHECK(d1.a[0] == doctest::Approx(0.5));
    CHECK(d1.b[0] == doctest::Approx(0.5));
    const auto &d2 = ctx2().delta;
    CHECK(d2.is_odd());
}

TEST_CASE("sigma is odd and normalized")
{
    const auto u1 = vec({Complex(1e-4, 2e-4)});
    CHECK(std::abs(sigma(ctx1(), u1) / u1[0] - 1.0) < 1e-7);
    const auto v1 = vec({Complex(0.3, 0.2)});
    CHECK(std::abs(sigma(ctx1(), v1) + sigma(ctx1(), -v1)) < 1e-14);
    const auto v2 = vec({Complex(0.3, 0.2), Complex(-0.1, 0.4)});
    CHECK(std::abs(sigma(ctx2(), v2) + sigma(ctx2(), -v2)) < 1e-13);
    // sigma = u_1 + ... near 0 in genus two, cubic in u_2
    CHECK(std::abs(sigma_partial(ctx2(), VectorXcd::Zero(2), {1}) - 1.0) < 1e-10);
    CHECK(std::abs(sigma_partial(ctx2(), VectorXcd::Zero(2), {2, 2, 2}) + 2.0) < 1e-8);
}

TEST_CASE("wp satisfies the Weierstrass equation and inverts the Abel map")
{
    const auto &c = ctx1();
    PointSampler s(5);
    for (int k = 0; k < 5; ++k) {
        const auto p = s.point(*c.curve);
        const VectorXcd u = abel(c, p);
        CHECK(std::abs(wp(c, 1, 1, u) - p.x) < 1e-11 * std::max(1.0, std::abs(p.x)));
        const double h = 1e-4;
        const Complex d = (wp(c, 1, 1, vec({u[0] + h})) - wp(c, 1, 1, vec({u[0] - h}))) / (2 * h);
        const Complex x = wp(c, 1, 1, u);
        CHECK(std::abs(oracle::weierstrass_defect(x, d, -1.0, 0.0)) < 1e-5 * std::max(1.0, std::abs(d * d)));
    }
}

TEST_CASE("genus two Jacobi inversion")
{
    const auto &c = ctx2();
    PointSampler s(6);
    for (int k = 0; k < 5; ++k) {
        const auto pts = s.points(*c.curve, 2);
        const VectorXcd u = abel_sum(*c.curve, pts);
        const Complex x1 = pts[0].x, x2 = pts[1].x;
        CHECK(std::abs(wp(c, 2, 2, u) - (x1 + x2)) < 1e-10 * std::max(1.0, std::abs(x1 + x2)));
        CHECK(std::abs(wp(c, 1, 2, u) + x1 * x2) < 1e-10 * std::max(1.0, std::abs(x1 * x2)));
    }
}

TEST_CASE("Abel map: involution and derivative")
{
    const HyperellipticCurve c(2, {1.0, 0.0, 0.0, 0.0, 0.0});
    PointSampler s(9);
    const auto p = s.point(c);
    CHECK(abel_point(c, p).norm() > 0);
    const VectorXcd sum = abel_point(c, p) + abel_point(c, p.involution());
    CHECK(reduce_to_fundamental(ctx2().periods, sum).residual < 1e-12);
    const Complex h(1e-5, 0.0);
    Complex yh{};
    Complex hp{1.0};
    for (const auto yk : y_jet(c, p, 8)) {
        yh += yk * hp;
        hp *= h;
    }
    const CurvePoint q{p.x + h, yh, false};
    const VectorXcd d = (abel_point(c, q) - abel_point(c, p)) / h;
    CHECK(std::abs(d[0] - 1.0 / (2.0 * p.y)) < 1e-4 * std::abs(1.0 / p.y));
    CHECK(std::abs(d[1] - p.x / (2.0 * p.y)) < 1e-4 * std::abs(p.x / p.y) + 1e-8);
}

TEST_CASE("translation law of sigma")
{
    for (const SigmaContext *c : {&ctx1(), &ctx2()}) {
        const int g = c->genus();
        Eigen::VectorXi m(2 * g);
        for (int i = 0; i < 2 * g; ++i) {
            m[i] = (i % 2 == 0) ? 1 : -1;
        }
        VectorXcd u(g);
        for (int i = 0; i < g; ++i) {
            u[i] = Complex(0.11 * (i + 1), -0.07);
        }
        const VectorXcd ell = lattice_vector(c->periods, m);
        const auto tf = translation_factors(*c, m, u);
        const Complex lhs = sigma(*c, u + ell);
        const Complex rhs = static_cast<double>(tf.chi) * sigma(*c, u) * std::exp(tf.L);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(std::abs(lhs), 1e-12));
    }
}
