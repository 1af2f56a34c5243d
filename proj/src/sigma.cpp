#include "hypertoda/sigma.hpp"

#include "hypertoda/error.hpp"

#include <cmath>
#include <numbers>

namespace hypertoda
{

namespace
{

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

struct Partials {
    std::vector<Complex> values;
    double envelope = 0; // |gamma0 G(u)| sum |theta terms|
};

Partials partials_with_envelope(const SigmaContext &ctx, const VectorXcd &u, const std::vector<VectorXcd> &dirs)
{
    const int k = static_cast<int>(dirs.size());
    const int nsub = 1 << k;
    const VectorXcd z = ctx.half_inv_omega * u;
    std::vector<VectorXcd> tdirs;
    for (const auto &d : dirs) {
        tdirs.push_back(ctx.half_inv_omega * d);
    }
    const auto th = theta_subset_derivs(ctx.delta, z, ctx.periods.riemann, tdirs, ctx.trunc_radius);
    if (th.tail > ctx.tol) {
        throw Error(ErrorCode::TruncationInsufficient, "theta tail estimate " + std::to_string(th.tail));
    }

    const MatrixXcd &M = ctx.gauss;
    const Complex G = ctx.gamma0 * std::exp(-0.5 * (u.transpose() * M * u)(0));
    std::vector<Complex> lin(k);
    MatrixXcd quad(k, k);
    for (int i = 0; i < k; ++i) {
        lin[i] = -(u.transpose() * M * dirs[i])(0);
        for (int j = 0; j < k; ++j) {
            quad(i, j) = -(dirs[i].transpose() * M * dirs[j])(0);
        }
    }
    // Derivatives of exp(q(w)) at w = 0, q(w) = -u^T M w - (1/2) w^T M w.
    std::vector<Complex> P(nsub);
    P[0] = 1.0;
    for (int S = 1; S < nsub; ++S) {
        int i = 0;
        while (!(S & (1 << i))) {
            ++i;
        }
        const int rest = S & ~(1 << i);
        Complex v = lin[i] * P[rest];
        for (int j = i + 1; j < k; ++j) {
            if (rest & (1 << j)) {
                v += quad(i, j) * P[rest & ~(1 << j)];
            }
        }
        P[S] = v;
    }

    Partials out;
    out.values.resize(nsub);
    for (int S = 0; S < nsub; ++S) {
        Complex acc{};
        for (int sub = S;; sub = (sub - 1) & S) {
            acc += P[sub] * th.values[S & ~sub];
            if (sub == 0) {
                break;
            }
        }
        out.values[S] = G * acc;
    }
    out.envelope = std::abs(G) * th.scales[0];
    return out;
}

std::vector<CurvePoint> probe_points(const HyperellipticCurve &curve, int count)
{
    static const Complex base[] = {{0.41, 0.29}, {-0.63, 0.52}, {0.17, -0.77}, {-0.35, -0.44},
                                   {0.72, 0.61}, {-0.21, 0.93}, {0.55, -0.38}, {-0.82, -0.17}};
    std::vector<CurvePoint> pts;
    for (int k = 0; k < count; ++k) {
        Complex x = curve.scale() * base[k % 8] * (1.0 + 0.13 * (k / 8));
        while (curve.distance_to_branch(x) < 0.1 * curve.scale()) {
            x += Complex(0.07, 0.05) * curve.scale();
        }
        pts.push_back(curve.lift(x, k % 2 == 0 ? 1 : -1));
    }
    return pts;
}

VectorXcd unit(int g, int i1)
{
    return VectorXcd::Unit(g, i1 - 1);
}

} // namespace

SigmaContext make_raw_context(const HyperellipticCurve &curve, const PeriodData &pd, const Characteristics &ch,
                              double theta_tol)
{
    SigmaContext ctx;
    ctx.curve = std::make_shared<const HyperellipticCurve>(curve);
    ctx.periods = pd;
    ctx.delta = ch;
    ctx.gamma0 = 1.0;
    ctx.tol = theta_tol;
    ctx.trunc_radius = truncation_radius(pd.riemann, theta_tol);
    const MatrixXcd inv = pd.omega1.inverse();
    const MatrixXcd M = pd.eta1 * inv;
    ctx.gauss = 0.5 * (M + M.transpose());
    ctx.half_inv_omega = 0.5 * inv;
    return ctx;
}

Characteristics riemann_characteristics(const HyperellipticCurve &curve, const PeriodData &pd,
                                        const SigmaConfig &cfg)
{
    const int g = curve.genus();
    const int trials = g == 1 ? 1 : 3;
    const auto pts = probe_points(curve, trials * (g - 1));
    std::vector<VectorXcd> us;
    for (int t = 0; t < trials; ++t) {
        VectorXcd u = VectorXcd::Zero(g);
        for (int k = 0; k < g - 1; ++k) {
            u += abel_point(curve, pts[t * (g - 1) + k]);
        }
        us.push_back(u);
    }

    std::vector<Characteristics> found;
    const int total = 1 << (2 * g);
    for (int mask = 0; mask < total; ++mask) {
        Characteristics ch = Characteristics::zero(g);
        for (int i = 0; i < g; ++i) {
            ch.a[i] = (mask >> i) & 1 ? 0.5 : 0.0;
            ch.b[i] = (mask >> (g + i)) & 1 ? 0.5 : 0.0;
        }
        const SigmaContext raw = make_raw_context(curve, pd, ch, cfg.theta_tol);
        bool vanishes = true;
        for (const auto &u : us) {
            const auto th = theta_char(ch, raw.half_inv_omega * u, pd.riemann, raw.trunc_radius);
            if (std::abs(th.value) > cfg.vanish_tol * th.scale) {
                vanishes = false;
                break;
            }
        }
        if (vanishes) {
            found.push_back(ch);
        }
    }
    if (found.size() != 1) {
        throw Error(ErrorCode::CharacteristicsNotFound,
                    std::to_string(found.size()) + " characteristics vanish on the test divisors");
    }
    return found.front();
}

Complex normalize_gamma0(const SigmaContext &raw)
{
    const int g = raw.genus();
    if (g > 2) {
        throw Error(ErrorCode::NormalizationUnstable, "normalization is implemented for genus 1 and 2");
    }
    const VectorXcd zero = VectorXcd::Zero(g);
    const Complex d1 = sigma_partial(raw, zero, {1});
    if (!(std::abs(d1) > 1e-200)) {
        throw Error(ErrorCode::NormalizationUnstable, "linear term of sigma vanishes");
    }
    const Complex gamma0 = 1.0 / d1;
    if (g == 2) {
        // Leading term u_1 - u_2^3 / 3: the third u_2-derivative at 0 is -2.
        const Complex d222 = gamma0 * sigma_partial(raw, zero, {2, 2, 2});
        if (std::abs(d222 + 2.0) > 1e-6) {
            throw Error(ErrorCode::NormalizationUnstable,
                        "cubic term check failed: " + std::to_string(d222.real()) + " + " +
                            std::to_string(d222.imag()) + "i");
        }
    }
    return gamma0;
}

SigmaContext make_sigma_context(const HyperellipticCurve &curve, const SigmaConfig &cfg)
{
    const PeriodData pd = compute_periods(curve, cfg.periods);
    const Characteristics ch = riemann_characteristics(curve, pd, cfg);
    SigmaContext ctx = make_raw_context(curve, pd, ch, cfg.theta_tol);
    ctx.gamma0 = normalize_gamma0(ctx);
    return ctx;
}

std::vector<Complex> sigma_partials(const SigmaContext &ctx, const Eigen::VectorXcd &u,
                                    const std::vector<Eigen::VectorXcd> &dirs)
{
    return partials_with_envelope(ctx, u, dirs).values;
}

Complex sigma(const SigmaContext &ctx, const Eigen::VectorXcd &u)
{
    return sigma_partials(ctx, u, {})[0];
}

Complex sigma_derivative(const SigmaContext &ctx, const Eigen::VectorXcd &u,
                         const std::vector<Eigen::VectorXcd> &dirs)
{
    return sigma_partials(ctx, u, dirs).back();
}

Complex sigma_partial(const SigmaContext &ctx, const Eigen::VectorXcd &u, const std::vector<int> &indices)
{
    std::vector<VectorXcd> dirs;
    for (const int i : indices) {
        if (i < 1 || i > ctx.genus()) {
            throw Error(ErrorCode::InvalidArgument, "sigma index out of range");
        }
        dirs.push_back(unit(ctx.genus(), i));
    }
    return sigma_derivative(ctx, u, dirs);
}

std::vector<int> natural_index_set(int g, int n)
{
    std::vector<int> out;
    if (n < 1 || n >= g) {
        return out;
    }
    for (int i = n + 1; i <= g; i += 2) {
        out.push_back(i);
    }
    return out;
}

std::vector<Complex> sigma_natural_partials(const SigmaContext &ctx, int n, const Eigen::VectorXcd &u,
                                            const std::vector<Eigen::VectorXcd> &extra)
{
    const auto nat = natural_index_set(ctx.genus(), n);
    std::vector<VectorXcd> dirs;
    for (const int i : nat) {
        dirs.push_back(unit(ctx.genus(), i));
    }
    dirs.insert(dirs.end(), extra.begin(), extra.end());
    const auto all = sigma_partials(ctx, u, dirs);
    const int nn = static_cast<int>(nat.size());
    const int base = (1 << nn) - 1;
    std::vector<Complex> out(std::size_t{1} << extra.size());
    for (std::size_t s = 0; s < out.size(); ++s) {
        out[s] = all[(s << nn) | base];
    }
    return out;
}

Complex sigma_natural(const SigmaContext &ctx, int n, const Eigen::VectorXcd &u)
{
    return sigma_natural_partials(ctx, n, u, {})[0];
}

Complex wp(const SigmaContext &ctx, int i, int j, const Eigen::VectorXcd &u)
{
    const int g = ctx.genus();
    const auto p = partials_with_envelope(ctx, u, {unit(g, i), unit(g, j)});
    const Complex s = p.values[0];
    if (std::abs(s) < 1e-10 * p.envelope) {
        throw Error(ErrorCode::ThetaDivisorPole, "sigma vanishes at the evaluation point");
    }
    return (p.values[1] * p.values[2] - s * p.values[3]) / (s * s);
}

Complex zeta(const SigmaContext &ctx, int i, const Eigen::VectorXcd &u)
{
    const auto p = partials_with_envelope(ctx, u, {unit(ctx.genus(), i)});
    if (std::abs(p.values[0]) < 1e-10 * p.envelope) {
        throw Error(ErrorCode::ThetaDivisorPole, "sigma vanishes at the evaluation point");
    }
    return p.values[1] / p.values[0];
}

Eigen::MatrixXcd wp_matrix(const SigmaContext &ctx, const Eigen::VectorXcd &u)
{
    const int g = ctx.genus();
    MatrixXcd W(g, g);
    for (int i = 1; i <= g; ++i) {
        for (int j = i; j <= g; ++j) {
            W(i - 1, j - 1) = wp(ctx, i, j, u);
            W(j - 1, i - 1) = W(i - 1, j - 1);
        }
    }
    return W;
}

Eigen::VectorXcd zeta_vector(const SigmaContext &ctx, const Eigen::VectorXcd &u)
{
    VectorXcd z(ctx.genus());
    for (int i = 1; i <= ctx.genus(); ++i) {
        z[i - 1] = zeta(ctx, i, u);
    }
    return z;
}

Complex L_form(const SigmaContext &ctx, const Eigen::VectorXcd &u, const Eigen::VectorXcd &v)
{
    const int g = ctx.genus();
    const Eigen::VectorXd r = lattice_coordinates(ctx.periods, v);
    const VectorXcd w = 2.0 * ctx.periods.eta1 * r.head(g).cast<Complex>() +
                        2.0 * ctx.periods.eta2 * r.tail(g).cast<Complex>();
    return -(u.transpose() * w)(0);
}

TranslationFactors translation_factors(const SigmaContext &ctx, const Eigen::VectorXi &m, const Eigen::VectorXcd &u)
{
    const int g = ctx.genus();
    const Eigen::VectorXi m1 = m.head(g);
    const Eigen::VectorXi m2 = m.tail(g);
    const double e = 2.0 * (m1.cast<double>().dot(ctx.delta.a) - m2.cast<double>().dot(ctx.delta.b)) +
                     static_cast<double>(m1.dot(m2));
    TranslationFactors tf;
    tf.chi = std::lround(e) % 2 == 0 ? 1 : -1;
    const VectorXcd l = lattice_vector(ctx.periods, m);
    const VectorXcd w =
        2.0 * ctx.periods.eta1 * m1.cast<Complex>() + 2.0 * ctx.periods.eta2 * m2.cast<Complex>();
    tf.L = -((u + 0.5 * l).transpose() * w)(0);
    return tf;
}

} // namespace hypertoda
