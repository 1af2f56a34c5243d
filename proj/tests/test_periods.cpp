#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoda/periods.hpp"
#include "oracles.hpp"

#include <Eigen/Eigenvalues>

using namespace hypertoda;

TEST_CASE("lemniscatic periods of y^2 = x^3 - x")
{
    const HyperellipticCurve c(1, {0.0, -1.0, 0.0});
    const auto pd = compute_periods(c);
    const double w = oracle::lemniscate_half_period();
    CHECK(std::abs(std::abs(pd.omega1(0, 0)) - w) < 1e-12);
    CHECK(std::abs(std::abs(pd.omega2(0, 0)) - w) < 1e-12);
    CHECK(std::abs(pd.riemann(0, 0) - Complex(0, 1)) < 1e-12);
    CHECK(pd.legendre_residual < 1e-10);
}

TEST_CASE("genus two: Legendre certificate and Riemann matrix")
{
    const HyperellipticCurve c(2, {1.0, 0.0, 0.0, 0.0, 0.0});
    const auto pd = compute_periods(c);
    CHECK(pd.legendre_residual < 1e-8);
    CHECK(legendre_residual(pd) < 1e-8);
    const Eigen::MatrixXcd T = pd.riemann;
    CHECK((T - T.transpose()).cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::MatrixXd Y = T.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Y);
    CHECK(es.eigenvalues().minCoeff() > 0);
}

TEST_CASE("cycle intersections are symplectic")
{
    const HyperellipticCurve c(2, {0.3, -1.0, 0.2, 0.5, 0.1});
    const auto cyc = build_cycles(c);
    const int g = 2;
    const Eigen::MatrixXi A = cyc.alpha.transpose() * cyc.chain_intersection * cyc.beta;
    CHECK((A == Eigen::MatrixXi::Identity(g, g) || A == -Eigen::MatrixXi::Identity(g, g)));
    const Eigen::MatrixXi AA = cyc.alpha.transpose() * cyc.chain_intersection * cyc.alpha;
    CHECK(AA == Eigen::MatrixXi::Zero(g, g));
}

TEST_CASE("lattice reduction recovers integer shifts")
{
    const HyperellipticCurve c(2, {1.0, 0.0, 0.0, 0.0, 0.0});
    const auto pd = compute_periods(c);
    Eigen::VectorXi m(4);
    m << 2, -1, 0, 3;
    Eigen::VectorXcd u(2);
    u << Complex(0.05, 0.02), Complex(-0.03, 0.01);
    const auto red = reduce_to_fundamental(pd, u + lattice_vector(pd, m));
    CHECK((red.reduced - u).norm() < 1e-10);
    CHECK(red.shift == m);
}
