#include "hypertoda/toda.hpp"

#include "hypertoda/error.hpp"

#include <cmath>
#include <random>

namespace hypertoda
{

namespace
{

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

double rel(Complex l, Complex r)
{
    return std::abs(l - r) / std::max({1.0, std::abs(l), std::abs(r)});
}

double default_step(const SigmaContext &ctx, double step)
{
    return step > 0 ? step : 1e-3 * ctx.curve->scale();
}

// Central difference of order 1 or 2 in a scalar parameter.
Complex central(const std::function<Complex(double)> &f, int order, double h, FdMode mode)
{
    auto once = [&](double s) {
        if (order == 1) {
            return (f(s) - f(-s)) / (2.0 * s);
        }
        return (f(s) - 2.0 * f(0.0) + f(-s)) / (s * s);
    };
    if (mode == FdMode::Plain) {
        return once(h);
    }
    return (4.0 * once(0.5 * h) - once(h)) / 3.0;
}

Complex sigma_flat_c(const TodaFrame &frame)
{
    return sigma_flat(*frame.ctx, frame.c);
}

Complex zeta_along(const SigmaContext &ctx, const VectorXcd &u, const VectorXcd &d)
{
    return log_sigma_derivative(ctx, u, {d});
}

} // namespace

Eigen::VectorXcd d_vector(int g, Complex xp)
{
    VectorXcd d(g);
    Complex p{1.0};
    for (int i = 0; i < g; ++i) {
        d[i] = p;
        p *= xp;
    }
    return d;
}

TodaFrame make_frame(std::shared_ptr<const SigmaContext> ctx, const CurvePoint &v1, const Eigen::VectorXcd &base)
{
    TodaFrame fr;
    fr.v1 = v1;
    fr.v1u = abel_point(*ctx->curve, v1);
    fr.c = 2.0 * fr.v1u;
    fr.d = d_vector(ctx->genus(), v1.x);
    fr.base = base;
    fr.ctx = std::move(ctx);
    if (std::abs(sigma_flat_c(fr)) < 1e-12) {
        throw Error(ErrorCode::ThetaDivisorPole, "sigma_flat(c) vanishes for this base point");
    }
    return fr;
}

TimeSplit split_time(const TodaFrame &frame, const Eigen::VectorXcd &u_minus_nc)
{
    TimeSplit s;
    s.t = frame.d.dot(u_minus_nc) / frame.d.squaredNorm();
    s.t_perp = u_minus_nc - s.t * frame.d;
    return s;
}

Complex directional_derivative(const std::function<Complex(const Eigen::VectorXcd &)> &h, const Eigen::VectorXcd &u,
                               const Eigen::VectorXcd &d, int order, double step, FdMode mode)
{
    if (order != 1 && order != 2) {
        throw Error(ErrorCode::InvalidArgument, "directional derivative order must be 1 or 2");
    }
    return central([&](double s) { return h(u + s * d); }, order, step, mode);
}

Complex log_sigma_derivative(const SigmaContext &ctx, const Eigen::VectorXcd &u,
                             const std::vector<Eigen::VectorXcd> &dirs)
{
    if (dirs.empty() || dirs.size() > 2) {
        throw Error(ErrorCode::InvalidArgument, "log sigma derivative supports one or two directions");
    }
    const auto p = sigma_partials(ctx, u, dirs);
    const Complex s = p[0];
    if (std::abs(s) == 0) {
        throw Error(ErrorCode::ThetaDivisorPole, "sigma vanishes at the evaluation point");
    }
    if (dirs.size() == 1) {
        return p[1] / s;
    }
    return (s * p[3] - p[1] * p[2]) / (s * s);
}

Complex V_hat(const SigmaContext &ctx, const Eigen::VectorXcd &u, Complex x1p, Complex x2p)
{
    const int g = ctx.genus();
    return -log_sigma_derivative(ctx, u, {d_vector(g, x1p), d_vector(g, x2p)});
}

Complex V(const TodaFrame &frame, const Eigen::VectorXcd &u)
{
    return -log_sigma_derivative(*frame.ctx, u, {frame.d, frame.d});
}

Complex V_c(const TodaFrame &frame)
{
    return f12(*frame.ctx->curve, frame.v1.x);
}

Complex V_hat_c(const HyperellipticCurve &curve, const CurvePoint &v1, const CurvePoint &v2)
{
    const Complex d = v1.x - v2.x;
    if (std::abs(d) < 1e-12) {
        throw Error(ErrorCode::ConfluentInput, "x'_1 = x'_2");
    }
    return (2.0 * v1.y * v2.y - baker_f2(curve, v1.x, v2.x)) / (d * d);
}

TodaResidual toda_residual_1d(const TodaFrame &frame, int n, Complex t, double fd_step, FdMode mode)
{
    const auto &ctx = *frame.ctx;
    const double h = default_step(ctx, fd_step);
    const VectorXcd u = frame.site(n, t);
    const Complex vc = V_c(frame);
    const Complex w0 = V(frame, u) - vc;
    const auto g = [&](double s) { return std::log((V(frame, u + s * frame.d) - vc) / w0); };
    TodaResidual r;
    r.lhs = -central(g, 2, h, mode);
    r.rhs = V(frame, frame.site(n + 1, t)) - 2.0 * (w0 + vc) + V(frame, frame.site(n - 1, t));
    r.residual = rel(r.lhs, r.rhs);
    return r;
}

HirotaResidual hirota_residual(const TodaFrame &frame, int n, Complex t)
{
    const auto &ctx = *frame.ctx;
    const VectorXcd u = frame.site(n, t);
    const auto p = sigma_partials(ctx, u, {frame.d, frame.d});
    const Complex sf = sigma_flat_c(frame);
    const Complex sf2 = sf * sf;
    const Complex s = p[0];
    const Complex t1 = s * sf2 * p[3];
    const Complex t2 = sf2 * p[1] * p[1];
    const Complex vc = V_c(frame);
    const Complex t3 = sf2 * vc * s * s;
    const Complex t3p = vc * s * s;
    const Complex t4 = sigma(ctx, frame.site(n + 1, t)) * sigma(ctx, frame.site(n - 1, t));
    HirotaResidual r;
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4), 1e-300});
    r.residual = std::abs(t1 - t2 + t3 - t4) / scale;
    const double scale_p = std::max({std::abs(t1), std::abs(t2), std::abs(t3p), std::abs(t4), 1e-300});
    r.printed_residual = std::abs(t1 - t2 - t3p - t4) / scale_p;
    return r;
}

Toda2dResidual toda2d_residual(const SigmaContext &ctx, const CurvePoint &v1, const CurvePoint &v2,
                               const Eigen::VectorXcd &base, int n, Complex t1, Complex t2, double fd_step)
{
    const auto &curve = *ctx.curve;
    const int g = ctx.genus();
    const Complex vhc = V_hat_c(curve, v1, v2);
    const VectorXcd d1 = d_vector(g, v1.x);
    const VectorXcd d2 = d_vector(g, v2.x);
    const VectorXcd c = abel_point(curve, v1) + abel_point(curve, v2);
    const VectorXcd u = base + static_cast<double>(n) * c + t1 * d1 + t2 * d2;
    const double h = default_step(ctx, fd_step);

    auto vh = [&](const VectorXcd &w) { return V_hat(ctx, w, v1.x, v2.x); };
    auto mixed = [&](double sign) {
        const Complex w0 = vh(u) + sign * vhc;
        auto G = [&](double s1, double s2) { return std::log((vh(u + s1 * d1 + s2 * d2) + sign * vhc) / w0); };
        auto once = [&](double s) { return (G(s, s) - G(s, -s) - G(-s, s) + G(-s, -s)) / (4.0 * s * s); };
        return (4.0 * once(0.5 * h) - once(h)) / 3.0;
    };
    const Complex rhs = vh(u + c) - 2.0 * vh(u) + vh(u - c);
    Toda2dResidual r;
    r.residual = rel(-mixed(1.0), rhs);
    r.printed_residual = rel(-mixed(-1.0), rhs);
    return r;
}

Complex zeta_c(const TodaFrame &frame)
{
    const auto p = sigma_natural_partials(*frame.ctx, 2, frame.c, {frame.d});
    return 0.5 * p[1] / p[0];
}

Flaschka flaschka(const TodaFrame &frame, int n, Complex t)
{
    const auto &ctx = *frame.ctx;
    const Complex sf = sigma_flat_c(frame);
    const VectorXcd un = frame.site(n, t);
    const Complex sn = sigma(ctx, un);
    Flaschka f;
    f.a = sigma(ctx, frame.site(n + 1, t)) * sigma(ctx, frame.site(n - 1, t)) / (sn * sn * sf * sf);
    f.a_wp = V_c(frame) - V(frame, un);
    f.a_agreement = rel(f.a, f.a_wp);
    f.b = zeta_along(ctx, un, frame.d) - zeta_along(ctx, frame.site(n - 1, t), frame.d) - zeta_c(frame);
    return f;
}

double flaschka_ode_residual(const TodaFrame &frame, int window, Complex t, double fd_step, FdMode mode)
{
    const double h = default_step(*frame.ctx, fd_step);
    double worst = 0;
    for (int k = 1; k <= window; ++k) {
        const auto fk = flaschka(frame, k, t);
        const auto fk1 = flaschka(frame, k + 1, t);
        const auto fkm = flaschka(frame, k - 1, t);
        const Complex da = central([&](double s) { return flaschka(frame, k, t + s).a; }, 1, h, mode);
        const Complex db = central([&](double s) { return flaschka(frame, k, t + s).b; }, 1, h, mode);
        worst = std::max(worst, rel(da, fk.a * (fk1.b - fk.b)));
        worst = std::max(worst, rel(db, fk.a - fkm.a));
    }
    return worst;
}

TodaState state_from_frame(const TodaFrame &frame, int N, Complex t)
{
    TodaState s;
    s.N = N;
    s.t = t;
    for (int n = 1; n <= N; ++n) {
        const auto f = flaschka(frame, n, t);
        s.a.push_back(f.a);
        s.b.push_back(f.b);
    }
    return s;
}

Eigen::MatrixXcd lax_matrix(const TodaState &state, Complex w_hat)
{
    const int N = state.N;
    if (N < 2) {
        throw Error(ErrorCode::InvalidArgument, "Lax matrix needs N >= 2");
    }
    MatrixXcd L = MatrixXcd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        L(i, i) = state.b[i];
    }
    for (int i = 0; i + 1 < N; ++i) {
        L(i, i + 1) += 1.0;
        L(i + 1, i) += state.a[i];
    }
    L(0, N - 1) += state.a[N - 1] / w_hat;
    L(N - 1, 0) += w_hat;
    return L;
}

ComplexPolynomial toda_P(const TodaState &state)
{
    const int N = state.N;
    // Tridiagonal determinant over indices [lo, hi] (0-based), b on the diagonal.
    auto delta = [&](int lo, int hi) {
        ComplexPolynomial prev2 = ComplexPolynomial::constant(1.0);
        if (hi < lo) {
            return prev2;
        }
        ComplexPolynomial prev = ComplexPolynomial{state.b[lo], -1.0};
        for (int k = lo + 1; k <= hi; ++k) {
            ComplexPolynomial cur = ComplexPolynomial{state.b[k], -1.0} * prev - state.a[k - 1] * prev2;
            prev2 = prev;
            prev = cur;
        }
        return prev;
    };
    return delta(0, N - 1) - state.a[N - 1] * delta(1, N - 2);
}

Complex lax_det_formula(const TodaState &state, Complex z, Complex w_hat)
{
    Complex prod{1.0};
    for (const auto a : state.a) {
        prod *= a;
    }
    const double sign = (state.N - 1) % 2 == 0 ? 1.0 : -1.0;
    return toda_P(state)(z) + sign * (w_hat + prod / w_hat);
}

SpectralData char_poly(const TodaState &state)
{
    const int N = state.N;
    SpectralData sd;
    sd.P = toda_P(state);
    for (int k = 1; k <= N; ++k) {
        const double sign = (N + k) % 2 == 0 ? 1.0 : -1.0;
        sd.invariants.push_back(sign * sd.P.coeff(N - k));
    }
    Complex prod{1.0};
    for (const auto a : state.a) {
        prod *= a;
    }
    sd.invariants.push_back(prod);
    sd.weierstrass_z = polynomial_roots(sd.P * sd.P - ComplexPolynomial::constant(4.0 * prod));
    sort_lex(sd.weierstrass_z);
    return sd;
}

MorphismCheck spectral_morphism(const TodaState &state, std::uint64_t seed, int samples)
{
    const auto sd = char_poly(state);
    const Complex prod = sd.invariants.back();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    MorphismCheck mc;
    const double sign = (state.N - 1) % 2 == 0 ? -1.0 : 1.0;
    for (int s = 0; s < samples; ++s) {
        const Complex z(U(rng), U(rng));
        const Complex Pz = sd.P(z);
        // w_hat^2 - P w_hat + prod a = 0
        const Complex w_hat = 0.5 * (Pz + std::sqrt(Pz * Pz - 4.0 * prod));
        const Complex w = 2.0 * w_hat - Pz;
        const Complex lhs = w * w;
        const Complex rhs = Pz * Pz - 4.0 * prod;
        mc.identity_residual = std::max(mc.identity_residual, rel(lhs, rhs));
        // For odd N the Lax spectral parameter is -w_hat.
        const Complex wl = sign * w_hat;
        const MatrixXcd L = lax_matrix(state, wl);
        const Complex det = (L - z * MatrixXcd::Identity(state.N, state.N)).determinant();
        mc.det_residual = std::max(mc.det_residual, std::abs(det) / std::max(1.0, std::abs(Pz)));
    }
    mc.weierstrass_z = sd.weierstrass_z;
    mc.genus = static_cast<int>(mc.weierstrass_z.size()) / 2 - 1;
    return mc;
}

double invariant_drift(const TodaFrame &frame, int N, const std::vector<Complex> &times)
{
    if (times.empty()) {
        return 0;
    }
    const auto I0 = char_poly(state_from_frame(frame, N, times.front())).invariants;
    double worst = 0;
    for (std::size_t k = 1; k < times.size(); ++k) {
        const auto I = char_poly(state_from_frame(frame, N, times[k])).invariants;
        for (std::size_t j = 0; j < I.size(); ++j) {
            worst = std::max(worst, std::abs(I[j] - I0[j]) / (1.0 + std::abs(I0[j])));
        }
    }
    return worst;
}

double periodicity_residual(const TodaFrame &frame, int N, Complex t)
{
    double worst = 0;
    for (int n = 0; n <= 2 * N; ++n) {
        const auto f0 = flaschka(frame, n, t);
        const auto f1 = flaschka(frame, n + N, t);
        worst = std::max({worst, std::abs(f1.a - f0.a), std::abs(f1.b - f0.b)});
    }
    return worst;
}

SigmaInvariants sigma_invariants(const TodaFrame &frame, int N, Complex t)
{
    const auto st = state_from_frame(frame, N, t);
    SigmaInvariants si;
    si.INp1_prod = 1.0;
    for (int i = 0; i < N; ++i) {
        si.I1_sum += st.b[i];
        si.INp1_prod *= st.a[i];
    }
    si.I1_claim = static_cast<double>(N) * zeta_c(frame);
    si.INp1_claim = std::pow(sigma_flat_c(frame), -2 * N);
    const Eigen::VectorXcd ell = static_cast<double>(N) * frame.c;
    si.quasi_factor = std::exp(L_form(*frame.ctx, frame.c, ell));
    si.I1_quasi = L_form(*frame.ctx, frame.d, ell) - si.I1_claim;
    return si;
}

} // namespace hypertoda
