#include "hypertoda/division.hpp"

#include "hypertoda/error.hpp"
#include "hypertoda/sampling.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace hypertoda
{

namespace
{

using Series = std::vector<Complex>;

Series series_mul(const Series &a, const Series &b)
{
    Series r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Series series_diff(const Series &a)
{
    Series r(a.size());
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
        r[k] = static_cast<double>(k + 1) * a[k + 1];
    }
    return r;
}

struct ToeplitzShape {
    int m = 0;
    int l = 0;
};

ToeplitzShape toeplitz_shape(int g, int n)
{
    if ((n - g) % 2 != 0) {
        return {g + 2, (n - g - 1) / 2};
    }
    return {g + 1, (n - g) / 2};
}

ComplexPolynomial poly_det(const std::vector<std::vector<ComplexPolynomial>> &M)
{
    const std::size_t n = M.size();
    if (n == 0) {
        return ComplexPolynomial::constant(1.0);
    }
    if (n == 1) {
        return M[0][0];
    }
    ComplexPolynomial acc;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<ComplexPolynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<ComplexPolynomial> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) {
                    row.push_back(M[r][k]);
                }
            }
            minor.push_back(std::move(row));
        }
        const ComplexPolynomial term = M[0][c] * poly_det(minor);
        acc = c % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

double normalized_value(const ComplexPolynomial &p, Complex x)
{
    double mag = 0;
    for (int k = p.degree(); k >= 0; --k) {
        mag = mag * std::abs(x) + std::abs(p.coeff(k));
    }
    return mag == 0 ? 0 : std::abs(p(x)) / mag;
}

bool same_point(const CurvePoint &a, const CurvePoint &b, double tol)
{
    if (a.at_infinity || b.at_infinity) {
        return a.at_infinity == b.at_infinity;
    }
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

std::vector<TorsionCandidate> candidates_for(const HyperellipticCurve &curve, const std::vector<int> &window,
                                             int target, double cluster_tol)
{
    std::vector<ComplexPolynomial> alphas;
    std::vector<std::vector<Complex>> roots;
    for (const int m : window) {
        alphas.push_back(cantor_alpha(curve, m).alpha);
        roots.push_back(polynomial_roots(alphas.back()));
    }
    const double branch_tol = 1e-6 * curve.scale();
    std::vector<TorsionCandidate> out;
    for (const auto x : roots.front()) {
        if (curve.distance_to_branch(x) < branch_tol) {
            continue;
        }
        const double tol = cluster_tol * std::max(1.0, std::abs(x));
        bool keep = true;
        for (std::size_t k = 1; k < roots.size() && keep; ++k) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto r : roots[k]) {
                best = std::min(best, std::abs(r - x));
            }
            keep = best <= tol;
        }
        for (const auto &c : out) {
            if (std::abs(c.point.x - x) <= tol) {
                keep = false;
            }
        }
        if (!keep) {
            continue;
        }
        TorsionCandidate c;
        c.point = curve.lift(x);
        c.order_target = target;
        for (const auto &a : alphas) {
            c.residuals.push_back(normalized_value(a, x));
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

int division_y_exponent(int g, int n)
{
    if (n > g + 1) {
        return (n - g) % 2 != 0 ? g * (g + 1) / 2 : g * (g - 1) / 2;
    }
    return n * (n - 1) / 2;
}

int division_alpha_degree(int g, int n)
{
    if (n < g + 2) {
        return -1;
    }
    if ((n - g) % 2 != 0) {
        return (g * (n + g) * (n - g) - g * (2 * g + 1)) / 2;
    }
    return g * (n + g) * (n - g) / 2;
}

Complex cantor_psi(const HyperellipticCurve &curve, int n, const CurvePoint &p)
{
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "division index must be positive");
    }
    const auto [m, l] = toeplitz_shape(curve.genus(), n);
    Complex det{1.0};
    if (l > 0) {
        const auto y = y_jet(curve, p, m + 2 * l - 2);
        Eigen::MatrixXcd T(l, l);
        for (int r = 0; r < l; ++r) {
            for (int c = 0; c < l; ++c) {
                T(r, c) = y[m + l - 1 + r - c];
            }
        }
        det = T.determinant();
    }
    return std::pow(2.0 * p.y, n * (n - 1) / 2) * det;
}

DivisionPolynomial cantor_alpha(const HyperellipticCurve &curve, int n)
{
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "division index must be positive");
    }
    const int g = curve.genus();
    DivisionPolynomial dp;
    dp.n = n;
    dp.y_exponent = division_y_exponent(g, n);
    const auto [m, l] = toeplitz_shape(g, n);
    if (l <= 0) {
        dp.alpha = ComplexPolynomial::constant(1.0);
        return dp;
    }
    const int K = m + 2 * l - 2;
    const ComplexPolynomial &f = curve.f();
    // f_k(x) = f^{(k)}(x) / k!
    std::vector<ComplexPolynomial> fk{f};
    for (int k = 1; k <= K; ++k) {
        fk.push_back(fk.back().derivative() * Complex(1.0 / k));
    }
    // y^{[k]} = P_k / y^{2k-1}
    std::vector<ComplexPolynomial> P{ComplexPolynomial::constant(1.0)};
    for (int k = 1; k <= K; ++k) {
        ComplexPolynomial acc = fk[k] * f.pow(k - 1);
        for (int j = 1; j < k; ++j) {
            acc -= P[j] * P[k - j];
        }
        P.push_back(acc * Complex(0.5));
    }
    std::vector<std::vector<ComplexPolynomial>> M(l, std::vector<ComplexPolynomial>(l));
    for (int r = 0; r < l; ++r) {
        for (int c = 0; c < l; ++c) {
            M[r][c] = P[m + l - 1 + r - c];
        }
    }
    const int e = n * (n - 1) / 2 + l - 2 * l * (m + l - 1);
    if (e != dp.y_exponent) {
        throw Error(ErrorCode::DegreeMismatch, "y exponent " + std::to_string(e) + " disagrees with the case table");
    }
    dp.alpha = (poly_det(M) * Complex(std::pow(2.0, n * (n - 1) / 2 - e))).trimmed(1e-12);
    const int want = division_alpha_degree(g, n);
    if (want >= 0 && dp.alpha.degree() != want) {
        throw Error(ErrorCode::DegreeMismatch, "alpha_" + std::to_string(n) + " has degree " +
                                                   std::to_string(dp.alpha.degree()) + ", expected " +
                                                   std::to_string(want));
    }
    return dp;
}

Complex kiepert_psi(const HyperellipticCurve &curve, int n, const CurvePoint &p, KiepertDerivation mode)
{
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "division index must be positive");
    }
    if (n == 1) {
        return 1.0;
    }
    const int g = curve.genus();
    const int order = n + 1;
    Series s = y_jet(curve, p, order);
    for (auto &v : s) {
        v *= 2.0;
    }
    if (g > 1 && mode == KiepertDerivation::AlongUg) {
        if (std::abs(p.x) < 1e-12) {
            throw Error(ErrorCode::InvalidArgument, "Kiepert derivation undefined at x = 0");
        }
        Series inv(static_cast<std::size_t>(order) + 1);
        for (int k = 0; k <= order; ++k) {
            inv[k] = std::pow(-1.0, k) / std::pow(p.x, k + 1);
        }
        for (int k = 1; k < g; ++k) {
            s = series_mul(s, inv);
        }
    }
    const int K = n - 1;
    Eigen::MatrixXcd M(K, K);
    for (int j = 1; j <= K; ++j) {
        Series F = phi_jet(curve, j, p, order);
        for (int k = 1; k <= K; ++k) {
            F = series_mul(series_diff(F), s);
            M(k - 1, j - 1) = F[0];
        }
    }
    double norm = 1.0;
    double fact = 1.0;
    for (int k = 1; k <= K; ++k) {
        fact *= k;
        norm *= fact;
    }
    return M.determinant() / norm;
}

ProportionalityCheck kiepert_vs_cantor(const HyperellipticCurve &curve, int n, int samples, std::uint64_t seed,
                                       KiepertDerivation mode)
{
    PointSampler sampler(seed);
    std::vector<Complex> r;
    for (int i = 0; i < samples; ++i) {
        const auto p = sampler.point(curve);
        r.push_back(kiepert_psi(curve, n, p, mode) / cantor_psi(curve, n, p));
    }
    ProportionalityCheck pc;
    for (const auto v : r) {
        pc.ratio += v;
    }
    pc.ratio /= static_cast<double>(r.size());
    for (const auto v : r) {
        pc.spread = std::max(pc.spread, std::abs(v - pc.ratio) / std::abs(pc.ratio));
    }
    return pc;
}

std::vector<CurvePoint> phi_roots(const HyperellipticCurve &curve, int n)
{
    std::vector<CurvePoint> out;
    for (const auto x : polynomial_roots(cantor_alpha(curve, n).alpha)) {
        const auto p = curve.lift(x);
        out.push_back(p);
        if (curve.distance_to_branch(x) > 1e-9 * curve.scale()) {
            out.push_back(p.involution());
        }
    }
    return out;
}

std::vector<TorsionCandidate> xi_set(const HyperellipticCurve &curve, int N, double cluster_tol)
{
    const int g = curve.genus();
    if (2 * N - g + 1 < 1) {
        throw Error(ErrorCode::InvalidArgument, "window 2N-g+1 .. 2N+g-1 must start at a positive index");
    }
    std::vector<int> window;
    for (int m = 2 * N - g + 1; m <= 2 * N + g - 1; ++m) {
        window.push_back(m);
    }
    return candidates_for(curve, window, 2 * N, cluster_tol);
}

std::vector<TorsionCandidate> torsion_candidates(const HyperellipticCurve &curve, int n)
{
    return candidates_for(curve, {n}, n, 1e-6);
}

TorsionFrame torsion_to_frame(std::shared_ptr<const SigmaContext> ctx, const CurvePoint &p, int N,
                              const Eigen::VectorXcd &base, double tol)
{
    const Eigen::VectorXcd c = 2.0 * abel_point(*ctx->curve, p);
    const auto red = reduce_to_fundamental(ctx->periods, static_cast<double>(N) * c);
    if (red.residual > tol) {
        throw Error(ErrorCode::NotTorsion, "N c misses the lattice by " + std::to_string(red.residual));
    }
    TorsionFrame tf;
    tf.period = N;
    tf.lattice_residual = red.residual;
    tf.frame = make_frame(std::move(ctx), p, base);
    return tf;
}

DivisibilityResult divisibility_check(const HyperellipticCurve &curve, const CurvePoint &p, int N, double tol)
{
    if (curve.genus() != 1) {
        throw Error(ErrorCode::InvalidArgument, "divisibility check needs single-point multiples (genus one)");
    }
    const double ptol = 1e-7 * curve.scale();
    std::vector<CurvePoint> mult{p};
    for (int l = 2; l < 2 * N; ++l) {
        const auto &prev = mult.back();
        if (prev.at_infinity) {
            mult.push_back(p);
        } else if (same_point(prev, p.involution(), ptol)) {
            mult.push_back(CurvePoint::infinity());
        } else {
            mult.push_back(reduce_divisor(curve, {p, prev}).q.at(0).involution());
        }
    }
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i].at_infinity) {
            throw Error(ErrorCode::MultiplesNotDistinct, std::to_string(i + 1) + "P is the origin");
        }
        for (std::size_t j = i + 1; j < mult.size(); ++j) {
            if (same_point(mult[i], mult[j], ptol)) {
                throw Error(ErrorCode::MultiplesNotDistinct,
                            std::to_string(i + 1) + "P = " + std::to_string(j + 1) + "P");
            }
        }
    }
    DivisibilityResult res;
    for (const auto &q : mult) {
        bool fresh = true;
        for (const auto x : res.multiples_x) {
            fresh = fresh && std::abs(x - q.x) > ptol;
        }
        if (fresh) {
            res.multiples_x.push_back(q.x);
        }
    }
    const ComplexPolynomial div = ComplexPolynomial::from_roots(res.multiples_x);
    res.divides = true;
    const int g = curve.genus();
    for (int m = 2 * N - g + 1; m <= 2 * N + g - 1; ++m) {
        const auto dp = cantor_alpha(curve, m);
        // Odd y-exponents vanish at the two-torsion multiples.
        const ComplexPolynomial target = dp.y_exponent % 2 != 0 ? dp.alpha * curve.f() : dp.alpha;
        const auto rem = divmod(target, div).second;
        const double r = rem.max_abs_coeff() / target.max_abs_coeff();
        res.remainders.push_back(r);
        res.divides = res.divides && r < tol;
    }
    return res;
}

ComplexPolynomial elliptic_psi_oracle(Complex a, Complex b, int n)
{
    if (n < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative division index");
    }
    const ComplexPolynomial F{b, a, 0.0, 1.0};
    const ComplexPolynomial F2x16 = F * F * Complex(16.0);
    std::map<int, ComplexPolynomial> q;
    q[0] = ComplexPolynomial{};
    q[1] = ComplexPolynomial::constant(1.0);
    q[2] = ComplexPolynomial::constant(1.0);
    q[3] = ComplexPolynomial{-a * a, 12.0 * b, 6.0 * a, 0.0, 3.0};
    q[4] = ComplexPolynomial{-8.0 * b * b - a * a * a, -4.0 * a * b, -5.0 * a * a, 20.0 * b, 5.0 * a, 0.0, 1.0} *
           Complex(2.0);
    std::function<ComplexPolynomial(int)> get = [&](int k) -> ComplexPolynomial {
        if (auto it = q.find(k); it != q.end()) {
            return it->second;
        }
        ComplexPolynomial r;
        if (k % 2 == 1) {
            const int h = (k - 1) / 2;
            if (h % 2 == 0) {
                r = F2x16 * get(h + 2) * get(h).pow(3) - get(h - 1) * get(h + 1).pow(3);
            } else {
                r = get(h + 2) * get(h).pow(3) - F2x16 * get(h - 1) * get(h + 1).pow(3);
            }
        } else {
            const int h = k / 2;
            r = get(h) * (get(h + 2) * get(h - 1).pow(2) - get(h - 2) * get(h + 1).pow(2));
        }
        q[k] = r;
        return r;
    };
    return get(n);
}

} // namespace hypertoda
