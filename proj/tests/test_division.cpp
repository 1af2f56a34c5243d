#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoda/division.hpp"
#include "hypertoda/error.hpp"
#include "oracles.hpp"

using namespace hypertoda;

namespace
{

double projective_distance(const ComplexPolynomial &a, const std::vector<Complex> &b_coeffs)
{
    const ComplexPolynomial b(b_coeffs);
    if (a.degree() != b.degree()) {
        return 1e300;
    }
    const ComplexPolynomial d = a * (1.0 / a.leading()) - b * (1.0 / b.leading());
    return d.max_abs_coeff();
}

const HyperellipticCurve &e1()
{
    static const HyperellipticCurve c(1, {0.0, -1.0, 0.0});
    return c;
}

} // namespace

TEST_CASE("alpha_3 and alpha_4 against closed forms")
{
    CHECK(projective_distance(cantor_alpha(e1(), 3).alpha, oracle::psi3(-1.0, 0.0)) < 1e-12);
    CHECK(projective_distance(cantor_alpha(e1(), 4).alpha, oracle::psi4_over_4y(-1.0, 0.0)) < 1e-12);
    CHECK(projective_distance(cantor_alpha(e1(), 4).alpha, oracle::psi4_factored_e1()) < 1e-12);
}

TEST_CASE("closed forms on a curve with b != 0")
{
    const HyperellipticCurve c(1, {0.7, -0.4, 0.0});
    CHECK(projective_distance(cantor_alpha(c, 3).alpha, oracle::psi3(-0.4, 0.7)) < 1e-12);
    CHECK(projective_distance(cantor_alpha(c, 4).alpha, oracle::psi4_over_4y(-0.4, 0.7)) < 1e-12);
}

TEST_CASE("cantor alpha agrees with the elliptic recurrence for n <= 8")
{
    for (int n = 2; n <= 8; ++n) {
        const auto o = elliptic_psi_oracle(-1.0, 0.0, n);
        CHECK(projective_distance(cantor_alpha(e1(), n).alpha, o.coeffs()) < 1e-9);
    }
}

TEST_CASE("stripped y exponent and degree formula")
{
    for (int g : {1, 2}) {
        const HyperellipticCurve c =
            g == 1 ? e1() : HyperellipticCurve(2, {1.0, 0.0, 0.0, 0.0, 0.0});
        for (int n = g + 2; n <= 8; ++n) {
            const auto dp = cantor_alpha(c, n);
            CHECK(dp.y_exponent == division_y_exponent(g, n));
            CHECK(dp.alpha.degree() == division_alpha_degree(g, n));
        }
    }
    CHECK(division_y_exponent(2, 5) == 3);
    CHECK(division_y_exponent(2, 6) == 1);
    CHECK(division_alpha_degree(1, 5) == 12);
}

TEST_CASE("pointwise Toeplitz value matches the y-cleared polynomial")
{
    const auto p = e1().lift(Complex(0.7, 0.45));
    for (int n = 2; n <= 7; ++n) {
        const auto dp = cantor_alpha(e1(), n);
        const Complex want = std::pow(2.0 * p.y, dp.y_exponent) * dp.alpha(p.x);
        CHECK(std::abs(cantor_psi(e1(), n, p) - want) < 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("Kiepert determinant: psi_2 and proportionality to the Toeplitz form")
{
    const auto p = e1().lift(Complex(0.3, 0.8));
    CHECK(std::abs(kiepert_psi(e1(), 2, p) - 2.0 * p.y) < 1e-13);
    for (int n = 3; n <= 6; ++n) {
        CHECK(kiepert_vs_cantor(e1(), n, 10, 1).spread < 1e-8);
    }
    const HyperellipticCurve c2(2, {1.0, 0.0, 0.0, 0.0, 0.0});
    CHECK(kiepert_vs_cantor(c2, 3, 10, 1).spread < 1e-6);
    CHECK(kiepert_vs_cantor(c2, 5, 10, 1).spread < 1e-6);
}

TEST_CASE("torsion points of order 3 and 4")
{
    bool found3 = false, found4 = false;
    for (const auto &c : torsion_candidates(e1(), 3)) {
        found3 = found3 || std::abs(c.point.x - oracle::x_order3()) < 1e-10;
    }
    for (const auto &c : xi_set(e1(), 2)) {
        found4 = found4 || std::abs(c.point.x - oracle::x_order4()) < 1e-10;
        CHECK(c.residuals.size() == 1);
    }
    CHECK(found3);
    CHECK(found4);
}

TEST_CASE("phi roots come in involution pairs")
{
    const auto pts = phi_roots(e1(), 3);
    CHECK(pts.size() == 8);
    for (const auto &p : pts) {
        CHECK(e1().on_curve(p, 1e-8));
    }
}

TEST_CASE("torsion frames and the negative control")
{
    const auto ctx = std::make_shared<const SigmaContext>(make_sigma_context(e1()));
    const Eigen::VectorXcd base = Eigen::VectorXcd::Constant(1, Complex(0.13, 0.21));
    CHECK(torsion_to_frame(ctx, e1().lift(oracle::x_order4()), 4, base).lattice_residual < 1e-7);
    CHECK(torsion_to_frame(ctx, e1().lift(oracle::x_order3()), 3, base).lattice_residual < 1e-7);
    try {
        torsion_to_frame(ctx, e1().lift(Complex(0.7, 0.3)), 4, base);
        FAIL("expected NotTorsion");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotTorsion);
    }
}

TEST_CASE("divisibility by the multiples of a torsion point")
{
    const auto p = e1().lift(oracle::x_order4());
    const auto d = divisibility_check(e1(), p, 2);
    CHECK(d.divides);
    CHECK_THROWS_AS(divisibility_check(e1(), p, 4), Error);
    const auto bad = divisibility_check(e1(), e1().lift(Complex(0.7, 0.3)), 2);
    CHECK_FALSE(bad.divides);
}

TEST_CASE("genus-two torsion search may be empty")
{
    const HyperellipticCurve c2(2, {1.0, 0.0, 0.0, 0.0, 0.0});
    CHECK_NOTHROW(xi_set(c2, 2));
}
