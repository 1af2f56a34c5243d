#include "hypertoda/poncelet.hpp"

#include "hypertoda/error.hpp"

#include <cmath>

namespace hypertoda
{

ConicPair make_conic_pair(const Eigen::Matrix3cd &A)
{
    if (A(1, 1) != Complex{}) {
        throw Error(ErrorCode::InvalidArgument, "a_5 must vanish");
    }
    if (std::abs(A.determinant()) < 1e-14 * std::pow(std::max(1.0, A.cwiseAbs().maxCoeff()), 3)) {
        throw Error(ErrorCode::DegenerateConicPair, "A is singular");
    }
    return {A};
}

EllipticReduction reduce_to_elliptic(const ConicPair &pair)
{
    const auto &A = pair.A;
    const Complex lead = A(0, 1) + A(1, 0);
    if (std::abs(lead) < 1e-14 * A.cwiseAbs().maxCoeff()) {
        throw Error(ErrorCode::DegenerateConicPair, "a_2 + a_4 = 0");
    }
    const Complex c2 = A(0, 0) + A(1, 2) + A(2, 1);
    const Complex c1 = A(0, 2) + A(2, 0);
    const Complex c0 = A(2, 2);
    try {
        return {HyperellipticCurve(1, {c0 / lead, c1 / lead, c2 / lead}), lead};
    } catch (const Error &e) {
        if (e.code() == ErrorCode::DegenerateCurve) {
            throw Error(ErrorCode::DegenerateConicPair, "reduced cubic has a repeated root");
        }
        throw;
    }
}

ConicPair constructed_pair(Complex a, Complex b, Complex xstar)
{
    const Complex s = xstar;
    Eigen::Matrix3cd S;
    S << s * s, a * s + 2.0 * b, s,
         a * s + 2.0 * b, a * a - 4.0 * b * s, -a - 2.0 * s * s,
         s, -a - 2.0 * s * s, 1.0;
    Eigen::Matrix3cd A = S.inverse();
    A(1, 1) = 0.0;
    return make_conic_pair(A);
}

std::vector<TorsionCandidate> cayley_closure_check(const ConicPair &pair, int N)
{
    return torsion_candidates(reduce_to_elliptic(pair).curve, N);
}

std::vector<Eigen::Vector3cd> poncelet_vertices(const SigmaContext &ctx, const CurvePoint &p, int count, Complex t)
{
    if (ctx.genus() != 1) {
        throw Error(ErrorCode::InvalidArgument, "Poncelet vertices live on a genus one curve");
    }
    const Eigen::VectorXcd u0 = abel(ctx, p);
    std::vector<Eigen::Vector3cd> out;
    for (int n = 1; n <= count; ++n) {
        Eigen::VectorXcd u = static_cast<double>(n - 1) * u0;
        u[0] += t;
        const Complex x = wp(ctx, 1, 1, u);
        out.emplace_back(x, x * x, 1.0);
    }
    return out;
}

double closure_residual(const SigmaContext &ctx, const CurvePoint &p, int N, Complex t)
{
    const auto v = poncelet_vertices(ctx, p, 2 * N, t);
    double worst = 0;
    for (int n = 0; n < N; ++n) {
        worst = std::max(worst, std::abs(v[n + N][0] - v[n][0]) / std::max(1.0, std::abs(v[n][0])));
    }
    return worst;
}

double tangency_residual(const ConicPair &pair, const std::vector<Eigen::Vector3cd> &vertices)
{
    const Eigen::Matrix3cd S = pair.A.inverse();
    const double snorm = S.cwiseAbs().maxCoeff();
    double worst = 0;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const Complex x = vertices[i][0];
        const Complex xp = vertices[i + 1][0];
        Eigen::Vector3cd L(x + xp, -1.0, -x * xp);
        L /= L.norm();
        worst = std::max(worst, std::abs((L.transpose() * S * L)(0)) / snorm);
    }
    return worst;
}

TodaResidual poncelet_toda_residual(const SigmaContext &ctx, const CurvePoint &p, int n, Complex t, double fd_step)
{
    const Eigen::VectorXcd u0 = abel(ctx, p);
    const Complex w0 = wp(ctx, 1, 1, u0);
    auto P = [&](int k, Complex s) {
        Eigen::VectorXcd u = static_cast<double>(k) * u0;
        u[0] += s;
        return wp(ctx, 1, 1, u) - w0;
    };
    const double h = fd_step > 0 ? fd_step : 1e-3 * ctx.curve->scale();
    const Complex base = P(n, t);
    auto g = [&](double s) { return std::log(P(n, t + s) / base); };
    auto once = [&](double s) { return (g(s) - 2.0 * g(0.0) + g(-s)) / (s * s); };
    TodaResidual r;
    r.lhs = -(4.0 * once(0.5 * h) - once(h)) / 3.0;
    r.rhs = P(n + 1, t) - 2.0 * base + P(n - 1, t);
    r.residual = std::abs(r.lhs - r.rhs) / std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
    return r;
}

} // namespace hypertoda
