#include "hypertoda/abel.hpp"

#include "hypertoda/error.hpp"
#include "hypertoda/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace hypertoda
{

namespace
{

using Eigen::VectorXcd;

Complex nearest_sign(Complex s, Complex ref)
{
    return std::abs(s + ref) < std::abs(s - ref) ? -s : s;
}

double branch_separation(const HyperellipticCurve &curve, int k)
{
    const auto &br = curve.branch_points();
    double d = curve.scale();
    for (int j = 0; j < static_cast<int>(br.size()); ++j) {
        if (j != k) {
            d = std::min(d, std::abs(br[j] - br[k]));
        }
    }
    return d;
}

// s(t) = sqrt(t^{4g+2} f(1/t^2)) = sqrt(prod (1 - e_j t^2)), s(0) = 1.
Complex s_of_t(const HyperellipticCurve &curve, Complex t)
{
    Complex prod{1.0};
    const Complex t2 = t * t;
    for (const auto e : curve.branch_points()) {
        prod *= 1.0 - e * t2;
    }
    return std::sqrt(prod);
}

// Integral from infinity (t = 0) to t_end; returns the integral and y at the end.
std::pair<VectorXcd, Complex> integrate_t(const HyperellipticCurve &curve, Complex t_end)
{
    const int g = curve.genus();
    const auto &rule = gauss_legendre(48);
    VectorXcd acc = VectorXcd::Zero(g);
    Complex prev{1.0};
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const Complex t = 0.5 * (rule.nodes[q] + 1.0) * t_end;
        const Complex s = nearest_sign(s_of_t(curve, t), prev);
        prev = s;
        for (int i = 1; i <= g; ++i) {
            acc[i - 1] += rule.weights[q] * (-std::pow(t, 2 * g - 2 * i) / s);
        }
    }
    acc *= 0.5 * t_end;
    const Complex s_end = nearest_sign(s_of_t(curve, t_end), prev);
    return {acc, s_end / std::pow(t_end, 2 * g + 1)};
}

// Straight x-segment with panels no longer than 0.3 times the distance to the
// nearest branch point; y is continued by nearest sign.
std::pair<VectorXcd, Complex> integrate_x(const HyperellipticCurve &curve, Complex x0, Complex y0, Complex x1)
{
    const int g = curve.genus();
    const auto &rule = gauss_legendre(16);
    VectorXcd acc = VectorXcd::Zero(g);
    Complex x = x0;
    Complex y = y0;
    const double tiny = 1e-10 * curve.scale();
    for (int panel = 0; panel < 100000; ++panel) {
        const double remaining = std::abs(x1 - x);
        if (remaining == 0) {
            return {acc, y};
        }
        const double d = curve.distance_to_branch(x);
        if (d < tiny) {
            throw Error(ErrorCode::PathThroughBranchPoint, "integration path meets a branch point");
        }
        const double len = std::min(remaining, 0.3 * d);
        const Complex xe = len == remaining ? x1 : x + (x1 - x) * (len / remaining);
        const Complex h = xe - x;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const Complex xq = x + 0.5 * (rule.nodes[q] + 1.0) * h;
            y = nearest_sign(std::sqrt(curve.eval_f(xq)), y);
            Complex xp{1.0};
            for (int i = 0; i < g; ++i) {
                acc[i] += 0.5 * h * rule.weights[q] * xp / (2.0 * y);
                xp *= xq;
            }
        }
        y = nearest_sign(std::sqrt(curve.eval_f(xe)), y);
        x = xe;
    }
    throw Error(ErrorCode::PathThroughBranchPoint, "too many panels on an integration path");
}

// Route from x0 to x1 with detours around branch points lying close to the
// straight segment. Detours always pass on the left of the direction of travel.
std::vector<Complex> route(const HyperellipticCurve &curve, Complex x0, Complex x1, int depth)
{
    const auto &br = curve.branch_points();
    const Complex dir = x1 - x0;
    const double len = std::abs(dir);
    if (depth > 6 || len == 0) {
        return {x1};
    }
    int worst = -1;
    double worst_ratio = 1.0;
    for (int k = 0; k < static_cast<int>(br.size()); ++k) {
        const double sp = std::real((br[k] - x0) * std::conj(dir)) / (len * len);
        if (sp <= 0 || sp >= 1) {
            continue;
        }
        const double dist = std::abs(x0 + sp * dir - br[k]);
        const double ratio = dist / (0.1 * branch_separation(curve, k));
        if (ratio < worst_ratio) {
            worst_ratio = ratio;
            worst = k;
        }
    }
    if (worst < 0) {
        return {x1};
    }
    const Complex normal = Complex(0, 1) * dir / len;
    const Complex w = br[worst] + 0.5 * branch_separation(curve, worst) * normal;
    auto first = route(curve, x0, w, depth + 1);
    auto second = route(curve, w, x1, depth + 1);
    first.insert(first.end(), second.begin(), second.end());
    return first;
}

std::pair<VectorXcd, Complex> integrate_route(const HyperellipticCurve &curve, Complex x0, Complex y0, Complex x1)
{
    VectorXcd acc = VectorXcd::Zero(curve.genus());
    Complex x = x0;
    Complex y = y0;
    for (const auto w : route(curve, x0, x1, 0)) {
        auto [part, yend] = integrate_x(curve, x, y, w);
        acc += part;
        x = w;
        y = yend;
    }
    return {acc, y};
}

} // namespace

Complex abel_basepoint(const HyperellipticCurve &curve)
{
    const double r = 10.0 * curve.scale();
    double best_phi = 0.5;
    double best_gap = -1;
    for (int k = 0; k < 12; ++k) {
        const double phi = 0.5 + 2.0 * std::numbers::pi * k / 12;
        double gap = std::numbers::pi;
        for (const auto e : curve.branch_points()) {
            if (std::abs(e) > 0.1 * curve.scale()) {
                const double d = std::abs(std::arg(e * std::polar(1.0, -phi)));
                gap = std::min(gap, d);
            }
        }
        if (gap > best_gap + 1e-12) {
            best_gap = gap;
            best_phi = phi;
        }
    }
    return std::polar(r, best_phi);
}

Eigen::VectorXcd abel_point(const HyperellipticCurve &curve, const CurvePoint &p)
{
    const int g = curve.genus();
    if (p.at_infinity) {
        return VectorXcd::Zero(g);
    }
    const Complex y_target = p.y;

    // Far out: integrate in t directly, choosing t_P on the sheet of P.
    if (std::abs(p.x) >= 5.0 * curve.scale()) {
        const Complex t = 1.0 / std::sqrt(p.x);
        auto [u, y] = integrate_t(curve, t);
        if (std::abs(y - y_target) <= std::abs(y + y_target)) {
            return u;
        }
        auto [u2, y2] = integrate_t(curve, -t);
        (void)y2;
        return u2;
    }

    const Complex B = abel_basepoint(curve);
    auto [u, yB] = integrate_t(curve, 1.0 / std::sqrt(B));

    const auto &br = curve.branch_points();
    int near = -1;
    for (int k = 0; k < static_cast<int>(br.size()); ++k) {
        if (std::abs(p.x - br[k]) < 0.3 * branch_separation(curve, k)) {
            near = k;
        }
    }

    if (near < 0) {
        auto [part, y] = integrate_route(curve, B, yB, p.x);
        u += part;
        if (std::abs(y - y_target) > std::abs(y + y_target)) {
            u = -u;
        }
        return u;
    }

    // Close to a branch point e: reach Q = e + rho (B - e)/|B - e|, then use
    // x = e + w^2, for which x^{i-1} dx / (2y) = x^{i-1} dw / h(x), y = w h(x).
    const Complex e = br[near];
    const double rho = 0.5 * branch_separation(curve, near);
    const Complex Q = e + rho * (B - e) / std::abs(B - e);
    auto [part, yQ] = integrate_route(curve, B, yB, Q);
    u += part;

    const Complex wQ = std::sqrt(Q - e);
    Complex hQ = yQ / wQ;
    auto h_of = [&](Complex x) {
        Complex prod{1.0};
        for (int k = 0; k < static_cast<int>(br.size()); ++k) {
            if (k != near) {
                prod *= x - br[k];
            }
        }
        return std::sqrt(prod);
    };

    // h is single valued on the disc around e, so continue it along Q -> P.
    Complex h = hQ;
    const int steps = 64;
    for (int j = 1; j <= steps; ++j) {
        h = nearest_sign(h_of(Q + (p.x - Q) * (static_cast<double>(j) / steps)), h);
    }
    Complex wP = std::sqrt(p.x - e);
    if (std::abs(y_target) > 0 && std::abs(wP) > 0) {
        const Complex cand = y_target / h;
        wP = std::abs(cand - wP) <= std::abs(cand + wP) ? wP : -wP;
    }

    const auto &rule = gauss_legendre(16);
    const int panels = 4;
    Complex hc = hQ;
    for (int pnl = 0; pnl < panels; ++pnl) {
        const Complex wa = wQ + (wP - wQ) * (static_cast<double>(pnl) / panels);
        const Complex wb = wQ + (wP - wQ) * (static_cast<double>(pnl + 1) / panels);
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const Complex w = wa + 0.5 * (rule.nodes[q] + 1.0) * (wb - wa);
            const Complex x = e + w * w;
            hc = nearest_sign(h_of(x), hc);
            Complex xp{1.0};
            for (int i = 0; i < g; ++i) {
                u[i] += 0.5 * (wb - wa) * rule.weights[q] * xp / hc;
                xp *= x;
            }
        }
    }
    return u;
}

AbelPoint abel_map(const HyperellipticCurve &curve, const std::vector<CurvePoint> &points)
{
    AbelPoint out{VectorXcd::Zero(curve.genus()), 0};
    int finite = 0;
    for (const auto &p : points) {
        out.u += abel_point(curve, p);
        if (!p.at_infinity) {
            ++finite;
        }
    }
    out.stratum = std::min(finite, curve.genus());
    return out;
}

} // namespace hypertoda
