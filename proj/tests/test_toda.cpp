#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoda/division.hpp"
#include "hypertoda/sampling.hpp"
#include "oracles.hpp"

using namespace hypertoda;
using Eigen::VectorXcd;

namespace
{

std::shared_ptr<const SigmaContext> ctx_g(int g)
{
    static const auto c1 =
        std::make_shared<const SigmaContext>(make_sigma_context(HyperellipticCurve(1, {0.0, -1.0, 0.0})));
    static const auto c2 =
        std::make_shared<const SigmaContext>(make_sigma_context(HyperellipticCurve(2, {1.0, 0.0, 0.0, 0.0, 0.0})));
    return g == 1 ? c1 : c2;
}

TodaFrame random_frame(int g, std::uint64_t seed)
{
    const auto ctx = ctx_g(g);
    PointSampler s(seed);
    const auto base = abel_sum(*ctx->curve, s.points(*ctx->curve, g));
    return make_frame(ctx, s.point(*ctx->curve), base);
}

TodaState random_state(int N, std::uint64_t seed)
{
    PointSampler s(seed);
    TodaState st;
    st.N = N;
    for (int k = 0; k < N; ++k) {
        st.a.emplace_back(s.uniform(0.5, 1.5), s.uniform(-0.5, 0.5));
        st.b.emplace_back(s.uniform(-1, 1), s.uniform(-1, 1));
    }
    return st;
}

} // namespace

TEST_CASE("V_c in genus one is wp at the doubled point")
{
    const auto ctx = ctx_g(1);
    const auto p = ctx->curve->lift(Complex(0.6, 0.7));
    const Complex lambda = oracle::df_e1(p.x) / (2.0 * p.y);
    const Complex x2 = lambda * lambda - 2.0 * p.x;
    const auto frame = make_frame(ctx, p, VectorXcd::Constant(1, Complex(0.2, 0.1)));
    CHECK(std::abs(V_c(frame) - x2) < 1e-12 * std::max(1.0, std::abs(x2)));
}

TEST_CASE("d vector and time split")
{
    const auto d = d_vector(3, Complex(2.0, 0.0));
    CHECK(d[2] == Complex(4.0));
    const auto frame = random_frame(2, 21);
    const VectorXcd w = 0.3 * frame.d + VectorXcd::Constant(2, Complex(0.0, 0.01));
    const auto ts = split_time(frame, w);
    CHECK((ts.t * frame.d + ts.t_perp - w).norm() < 1e-14);
    CHECK(std::abs(frame.d.dot(ts.t_perp)) < 1e-14);
}

TEST_CASE("one-dimensional Toda and its bilinear form")
{
    for (int g : {1, 2}) {
        const auto frame = random_frame(g, 30 + g);
        const double thr = g == 1 ? 1e-6 : 1e-5;
        for (int n = -2; n <= 2; ++n) {
            CHECK(toda_residual_1d(frame, n, 0.0).residual < thr);
            CHECK(hirota_residual(frame, n, 0.0).residual < 1e-10);
        }
        CHECK(hirota_residual(frame, 0, 0.0).printed_residual > 1e-4);
    }
}

TEST_CASE("Richardson extrapolation improves the plain difference")
{
    const auto frame = random_frame(1, 40);
    const double plain = toda_residual_1d(frame, 0, 0.0, 0, FdMode::Plain).residual;
    const double rich = toda_residual_1d(frame, 0, 0.0, 0, FdMode::Richardson).residual;
    CHECK(rich < plain);
}

TEST_CASE("two-time Toda in genus two")
{
    const auto ctx = ctx_g(2);
    PointSampler s(41);
    const auto base = abel_sum(*ctx->curve, s.points(*ctx->curve, 2));
    const auto v = s.points(*ctx->curve, 2);
    const auto r = toda2d_residual(*ctx, v[0], v[1], base, 0, 0.0, 0.0);
    CHECK(r.residual < 1e-5);
    CHECK(r.printed_residual > 1e-3);
}

TEST_CASE("Flaschka variables: two expressions for a and the Toda ODE")
{
    for (int g : {1, 2}) {
        const auto frame = random_frame(g, 50 + g);
        for (int n = -2; n <= 2; ++n) {
            CHECK(flaschka(frame, n, 0.0).a_agreement < 1e-9);
        }
        CHECK(flaschka_ode_residual(frame, 3, 0.0) < 1e-6);
    }
}

TEST_CASE("Lax determinant against the direct determinant")
{
    for (int N = 2; N <= 5; ++N) {
        const auto st = random_state(N, 60 + N);
        for (const Complex z : {Complex(0.3, 0.2), Complex(-1.0, 0.5)}) {
            const Complex w(0.7, -0.4);
            const Eigen::MatrixXcd M = lax_matrix(st, w) - z * Eigen::MatrixXcd::Identity(N, N);
            CHECK(std::abs(M.determinant() - lax_det_formula(st, z, w)) < 1e-12 * std::max(1.0, std::abs(M.determinant())));
        }
    }
}

TEST_CASE("invariants: trace and product")
{
    const auto st = random_state(4, 70);
    const auto sd = char_poly(st);
    REQUIRE(sd.invariants.size() == 5);
    Complex trace{}, prod{1.0};
    for (int k = 0; k < 4; ++k) {
        trace += st.b[k];
        prod *= st.a[k];
    }
    CHECK(std::abs(sd.invariants[0] - trace) < 1e-13);
    CHECK(std::abs(sd.invariants[4] - prod) < 1e-13);
    CHECK(sd.weierstrass_z.size() == 8);
    const auto mc = spectral_morphism(st);
    CHECK(mc.identity_residual < 1e-12);
    CHECK(mc.det_residual < 1e-12);
    CHECK(mc.genus == 3);
}

TEST_CASE("periodic frames from torsion points")
{
    const auto ctx = ctx_g(1);
    const auto &c = *ctx->curve;
    const VectorXcd base = VectorXcd::Constant(1, Complex(0.13, 0.21));
    for (const auto &[N, x] : std::vector<std::pair<int, double>>{{3, oracle::x_order3()}, {4, oracle::x_order4()}}) {
        const auto frame = make_frame(ctx, c.lift(x), base);
        CHECK(periodicity_residual(frame, N, 0.0) < 1e-9);
        CHECK(invariant_drift(frame, N, {0.0, 0.05, Complex(0.02, 0.04)}) < 1e-9);
        const auto si = sigma_invariants(frame, N, 0.0);
        CHECK(std::abs(si.I1_sum - si.I1_quasi) < 1e-9);
        CHECK(std::abs(si.INp1_prod - si.INp1_claim * si.quasi_factor) < 1e-9 * std::abs(si.INp1_prod));
    }
}

TEST_CASE("invariants drift on a non-periodic frame")
{
    const auto frame = random_frame(1, 80);
    CHECK(invariant_drift(frame, 3, {0.0, 0.1}) > 1e-4);
}
