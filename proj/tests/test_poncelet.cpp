#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoda/error.hpp"
#include "hypertoda/poncelet.hpp"
#include "oracles.hpp"

using namespace hypertoda;

TEST_CASE("constructed pair reduces back to the standard curve")
{
    const auto pair = constructed_pair(-1.0, 0.0, 0.8);
    CHECK(pair.A(1, 1) == Complex{});
    const auto red = reduce_to_elliptic(pair);
    CHECK(std::abs(red.curve.lambda(0)) < 1e-12);
    CHECK(std::abs(red.curve.lambda(1) + 1.0) < 1e-12);
    CHECK(std::abs(red.curve.lambda(2)) < 1e-12);
}

TEST_CASE("reduction errors")
{
    Eigen::Matrix3cd A;
    A << 1.0, 1.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0;
    try {
        reduce_to_elliptic(make_conic_pair(A));
        FAIL("expected DegenerateConicPair");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::DegenerateConicPair);
    }
    // Q(x) = x^3 - 2 x^2 + x has a double root at 1
    Eigen::Matrix3cd B;
    B << -2.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0;
    B(2, 2) = 0.0;
    B(1, 2) = 0.0;
    CHECK_THROWS_AS(reduce_to_elliptic(ConicPair{B}), Error);
    Eigen::Matrix3cd C = Eigen::Matrix3cd::Identity();
    CHECK_THROWS_AS(make_conic_pair(C), Error);
}

TEST_CASE("closure and tangency for order 3 and 4")
{
    const HyperellipticCurve c(1, {0.0, -1.0, 0.0});
    const auto ctx = make_sigma_context(c);
    for (const auto &[N, x] : std::vector<std::pair<int, double>>{{3, oracle::x_order3()}, {4, oracle::x_order4()}}) {
        const auto p = c.lift(x);
        const auto pair = constructed_pair(-1.0, 0.0, x);
        for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            CHECK(closure_residual(ctx, p, N, Complex(t, 0.05)) < 1e-8);
            const auto v = poncelet_vertices(ctx, p, N + 1, Complex(t, 0.05));
            CHECK(tangency_residual(pair, v) < 1e-8);
            for (const auto &vert : v) {
                CHECK(std::abs(vert[0] * vert[0] - vert[1] * vert[2]) < 1e-12 * std::max(1.0, std::norm(vert[0])));
            }
        }
        CHECK(poncelet_toda_residual(ctx, p, 1, Complex(0.3, 0.1)).residual < 1e-6);
        bool hit = false;
        for (const auto &cand : cayley_closure_check(pair, N)) {
            hit = hit || std::abs(cand.point.x - x) < 1e-9;
        }
        CHECK(hit);
    }
}

TEST_CASE("a non-torsion step does not close")
{
    const HyperellipticCurve c(1, {0.0, -1.0, 0.0});
    const auto ctx = make_sigma_context(c);
    CHECK(closure_residual(ctx, c.lift(Complex(0.7, 0.3)), 3, Complex(0.2, 0.05)) > 1e-3);
}
