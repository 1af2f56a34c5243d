#include "hypertoda/addition.hpp"

#include "hypertoda/error.hpp"

#include <cmath>

namespace hypertoda
{

namespace
{

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

bool same_point(const HyperellipticCurve &curve, const CurvePoint &a, const CurvePoint &b)
{
    return std::abs(a.x - b.x) <= 1e-12 * curve.scale() && std::abs(a.y - b.y) <= 1e-12 * (1.0 + std::abs(a.y));
}

// Rows (phi_0 .. phi_{ncols-1}) for the points, with Taylor rows for repeats.
MatrixXcd confluent_rows(const HyperellipticCurve &curve, const DivisorList &pts, int ncols)
{
    const int n = static_cast<int>(pts.size());
    MatrixXcd rows(n, ncols);
    for (int r = 0; r < n; ++r) {
        int order = 0;
        for (int s = 0; s < r; ++s) {
            if (same_point(curve, pts[s], pts[r])) {
                ++order;
            }
        }
        for (int j = 0; j < ncols; ++j) {
            if (order == 0) {
                rows(r, j) = phi(curve, j, pts[r]);
            } else {
                rows(r, j) = phi_jet(curve, j, pts[r], order)[order];
            }
        }
    }
    return rows;
}

Complex F_at(const DivisorList &u_pts, Complex x)
{
    Complex v{1.0};
    for (const auto &p : u_pts) {
        v *= x - p.x;
    }
    return v;
}

Complex F_prime_at_root(const DivisorList &u_pts, int i)
{
    Complex v{1.0};
    for (int k = 0; k < static_cast<int>(u_pts.size()); ++k) {
        if (k != i) {
            v *= u_pts[i].x - u_pts[k].x;
        }
    }
    return v;
}

Complex wp_bilinear(const SigmaContext &ctx, const VectorXcd &u, Complex a, Complex b)
{
    const auto W = wp_matrix(ctx, u);
    Complex s{};
    for (int i = 0; i < ctx.genus(); ++i) {
        for (int j = 0; j < ctx.genus(); ++j) {
            s += W(i, j) * std::pow(a, i) * std::pow(b, j);
        }
    }
    return s;
}

Complex sigma_ratio(const SigmaContext &ctx, const VectorXcd &u, const VectorXcd &v, Complex denom_v)
{
    const Complex su = sigma(ctx, u);
    return sigma(ctx, u + v) * sigma(ctx, u - v) / (su * su * denom_v * denom_v);
}

void require_non_confluent(const DivisorList &u_pts, const CurvePoint &v1, const CurvePoint &v2)
{
    const double tiny = 1e-12;
    if (std::abs(v1.x - v2.x) < tiny) {
        throw Error(ErrorCode::ConfluentInput, "x'_1 = x'_2");
    }
    for (std::size_t i = 0; i < u_pts.size(); ++i) {
        if (std::abs(u_pts[i].x - v1.x) < tiny || std::abs(u_pts[i].x - v2.x) < tiny) {
            throw Error(ErrorCode::ConfluentInput, "x_i coincides with x'_j");
        }
        for (std::size_t k = i + 1; k < u_pts.size(); ++k) {
            if (std::abs(u_pts[i].x - u_pts[k].x) < tiny) {
                throw Error(ErrorCode::ConfluentInput, "F'(x_i) = 0");
            }
        }
    }
}

} // namespace

IdentityResidual make_residual(Complex lhs, Complex rhs)
{
    IdentityResidual r{lhs, rhs};
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
    r.residual = std::abs(lhs - rhs) / scale;
    r.sign_anomaly = r.residual > 1e-3 && std::abs(lhs + rhs) / scale < 1e-3;
    return r;
}

Eigen::VectorXcd abel_sum(const HyperellipticCurve &curve, const DivisorList &pts)
{
    return abel_map(curve, pts).u;
}

Complex fs_det(const HyperellipticCurve &curve, const DivisorList &pts)
{
    const int n = static_cast<int>(pts.size());
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "Frobenius-Stickelberger determinant needs a point");
    }
    MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j < n; ++j) {
            m(r, j) = phi(curve, j, pts[r]);
        }
    }
    return m.determinant();
}

int epsilon_n(int g, int n)
{
    const int e = n <= g ? g + n * (n + 1) / 2 : (2 * n - g) * (g - 1) / 2;
    return e % 2 == 0 ? 1 : -1;
}

int delta_gmn(int g, int m, int n)
{
    const int e = g * n + n * (n - 1) / 2 + m * n;
    return e % 2 == 0 ? 1 : -1;
}

IdentityResidual fs_residual(const SigmaContext &ctx, const DivisorList &pts)
{
    const auto &curve = *ctx.curve;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (same_point(curve, pts[i], pts[j])) {
                return {};
            }
        }
    }
    std::vector<VectorXcd> us;
    VectorXcd total = VectorXcd::Zero(ctx.genus());
    for (const auto &p : pts) {
        us.push_back(abel_point(curve, p));
        total += us.back();
    }
    Complex lhs = sigma_natural(ctx, n, total);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            lhs *= sigma_flat(ctx, us[i] - us[j]);
        }
        lhs /= std::pow(sigma_sharp(ctx, us[i]), n);
    }
    return make_residual(lhs, static_cast<double>(epsilon_n(ctx.genus(), n)) * fs_det(curve, pts));
}

std::vector<Complex> mu_coefficients(const HyperellipticCurve &curve, const DivisorList &pts)
{
    const int n = static_cast<int>(pts.size());
    const MatrixXcd rows = confluent_rows(curve, pts, n + 1);
    auto minor_without = [&](int col) {
        MatrixXcd m(n, n);
        for (int c = 0, k = 0; c <= n; ++c) {
            if (c != col) {
                m.col(k++) = rows.col(c);
            }
        }
        return n == 0 ? Complex{1.0} : m.determinant();
    };
    const Complex denom = minor_without(n);
    double row_scale = 1.0;
    for (int r = 0; r < n; ++r) {
        row_scale *= std::max(1e-300, rows.row(r).norm());
    }
    if (std::abs(denom) <= 1e-14 * row_scale) {
        throw Error(ErrorCode::IndeterminateLimit, "Frobenius-Stickelberger cofactor vanishes");
    }
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const double sign = (n + j) % 2 == 0 ? 1.0 : -1.0;
        c[j] = sign * minor_without(j) / denom;
    }
    return c;
}

Complex mu_n(const HyperellipticCurve &curve, const CurvePoint &p, const DivisorList &pts)
{
    const auto c = mu_coefficients(curve, pts);
    Complex v{};
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        v += c[j] * phi(curve, j, p);
    }
    return v;
}

DivisorReduction reduce_divisor(const HyperellipticCurve &curve, const DivisorList &pts)
{
    const int g = curve.genus();
    const int n = static_cast<int>(pts.size());
    DivisorReduction out;
    if (n <= g) {
        // mu_n is a polynomial in x alone; its other zeros are the conjugates.
        for (const auto &p : pts) {
            out.q.push_back(p.involution());
            out.negated.push_back(p);
        }
        return out;
    }
    const auto c = mu_coefficients(curve, pts);
    std::vector<Complex> a_coef(c.size() + 1), b_coef(c.size() + 1);
    for (int j = 0; j <= n; ++j) {
        const auto [xa, yb] = phi_exponents(g, j);
        (yb == 0 ? a_coef : b_coef)[xa] += c[j];
    }
    const ComplexPolynomial A(a_coef);
    const ComplexPolynomial B(b_coef);
    ComplexPolynomial norm = A * A - B * B * curve.f();
    for (const auto &p : pts) {
        norm = divmod(norm, ComplexPolynomial{-p.x, 1.0}).first;
    }
    norm = norm.trimmed(1e-10);
    if (norm.degree() != g) {
        throw Error(ErrorCode::DegreeMismatch, "reduced norm has degree " + std::to_string(norm.degree()));
    }
    for (const auto x : polynomial_roots(norm)) {
        const Complex b = B(x);
        CurvePoint q{x, -A(x) / b, false};
        out.q.push_back(q);
        out.negated.push_back(q.involution());
    }
    return out;
}

Complex xi(const HyperellipticCurve &curve, const DivisorList &u_pts, const CurvePoint &v1, const CurvePoint &v2)
{
    if (static_cast<int>(u_pts.size()) != curve.genus()) {
        throw Error(ErrorCode::InvalidArgument, "Xi needs g points for u");
    }
    require_non_confluent(u_pts, v1, v2);
    const Complex F1 = F_at(u_pts, v1.x);
    const Complex F2 = F_at(u_pts, v2.x);
    Complex s1{};
    for (int i = 0; i < curve.genus(); ++i) {
        s1 += u_pts[i].y / ((u_pts[i].x - v1.x) * (u_pts[i].x - v2.x) * F_prime_at_root(u_pts, i));
    }
    const Complex d = v1.x - v2.x;
    const Complex s2 = -v1.y / (d * F1) + v2.y / (d * F2);
    return F1 * F2 * s1 * s1 - F1 * F2 * s2 * s2;
}

IdentityResidual thm_add_residual(const SigmaContext &ctx, const DivisorList &m_pts, const DivisorList &n_pts)
{
    const auto &curve = *ctx.curve;
    const int g = ctx.genus();
    const int m = static_cast<int>(m_pts.size());
    const int n = static_cast<int>(n_pts.size());
    const VectorXcd u = abel_sum(curve, m_pts);
    const VectorXcd v = abel_sum(curve, n_pts);
    const Complex sm = sigma_natural(ctx, m, u);
    const Complex sn = sigma_natural(ctx, n, v);
    const Complex lhs =
        sigma_natural(ctx, m + n, u + v) * sigma_natural(ctx, m + n, u - v) / (sm * sm * sn * sn);

    DivisorList plus = m_pts;
    DivisorList minus = m_pts;
    for (const auto &p : n_pts) {
        plus.push_back(p);
        minus.push_back(p.involution());
    }
    const Complex pm = fs_det(curve, m_pts);
    const Complex pn = fs_det(curve, n_pts);
    Complex rhs = static_cast<double>(delta_gmn(g, m, n)) * fs_det(curve, plus) * fs_det(curve, minus) /
                  (pm * pm * pn * pn);
    for (const auto &p : m_pts) {
        for (const auto &q : n_pts) {
            rhs /= fs_det(curve, {p, q});
        }
    }
    return make_residual(lhs, rhs);
}

IdentityResidual xi_residual(const SigmaContext &ctx, const DivisorList &u_pts, const CurvePoint &v1,
                             const CurvePoint &v2)
{
    const auto &curve = *ctx.curve;
    const VectorXcd u = abel_sum(curve, u_pts);
    const VectorXcd v = abel_point(curve, v1) + abel_point(curve, v2);
    const Complex lhs = sigma_ratio(ctx, u, v, sigma_flat(ctx, v));
    return make_residual(lhs, -xi(curve, u_pts, v1, v2));
}

Complex baker_rhs(const HyperellipticCurve &curve, const DivisorList &u_pts, Complex x1p, Complex x2p)
{
    const CurvePoint v1{x1p, 1.0, false};
    const CurvePoint v2{x2p, 1.0, false};
    require_non_confluent(u_pts, v1, v2);
    const Complex F1 = F_at(u_pts, x1p);
    const Complex F2 = F_at(u_pts, x2p);
    Complex s{};
    for (int i = 0; i < static_cast<int>(u_pts.size()); ++i) {
        s += u_pts[i].y / ((x1p - u_pts[i].x) * (x2p - u_pts[i].x) * F_prime_at_root(u_pts, i));
    }
    const Complex d2 = (x1p - x2p) * (x1p - x2p);
    return F1 * F2 * s * s - curve.eval_f(x1p) * F2 / (d2 * F1) - curve.eval_f(x2p) * F1 / (d2 * F2) +
           baker_f2(curve, x1p, x2p) / d2;
}

IdentityResidual baker_residual(const SigmaContext &ctx, const DivisorList &u_pts, Complex x1p, Complex x2p)
{
    const VectorXcd u = abel_sum(*ctx.curve, u_pts);
    return make_residual(wp_bilinear(ctx, u, x1p, x2p), baker_rhs(*ctx.curve, u_pts, x1p, x2p));
}

IdentityResidual fay_residual(const SigmaContext &ctx, const DivisorList &u_pts, const CurvePoint &v1,
                              const CurvePoint &v2)
{
    const auto &curve = *ctx.curve;
    require_non_confluent(u_pts, v1, v2);
    const VectorXcd u = abel_sum(curve, u_pts);
    const VectorXcd v = abel_point(curve, v1) + abel_point(curve, v2);
    const Complex lhs = sigma_ratio(ctx, u, v, sigma_flat(ctx, v));
    const Complex d = v1.x - v2.x;
    const Complex rhs =
        (baker_f2(curve, v1.x, v2.x) - 2.0 * v1.y * v2.y) / (d * d) - wp_bilinear(ctx, u, v1.x, v2.x);
    return make_residual(lhs, rhs);
}

IdentityResidual deg1_residual(const SigmaContext &ctx, const DivisorList &u_pts, const CurvePoint &v1)
{
    const auto &curve = *ctx.curve;
    const VectorXcd u = abel_sum(curve, u_pts);
    const VectorXcd v2 = 2.0 * abel_point(curve, v1);
    const Complex lhs = sigma_ratio(ctx, u, v2, sigma_flat(ctx, v2));
    const Complex rhs = f12(curve, v1.x) - wp_bilinear(ctx, u, v1.x, v1.x);
    return make_residual(lhs, rhs);
}

IdentityResidual deg2_F_check(const SigmaContext &ctx, const DivisorList &u_pts, const CurvePoint &v1)
{
    const auto &curve = *ctx.curve;
    const VectorXcd u = abel_sum(curve, u_pts);
    const VectorXcd v = abel_point(curve, v1);
    const Complex lhs = sigma_ratio(ctx, u, v, sigma_sharp(ctx, v));
    return make_residual(lhs, F_at(u_pts, v1.x));
}

IdentityResidual jacobi_inversion_check(const SigmaContext &ctx, const DivisorList &u_pts, Complex xp)
{
    const int g = ctx.genus();
    const VectorXcd u = abel_sum(*ctx.curve, u_pts);
    Complex lhs = std::pow(xp, g);
    for (int j = 1; j <= g; ++j) {
        lhs -= wp(ctx, g, j, u) * std::pow(xp, j - 1);
    }
    return make_residual(lhs, F_at(u_pts, xp));
}

} // namespace hypertoda
