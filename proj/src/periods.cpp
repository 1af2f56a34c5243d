#include "hypertoda/periods.hpp"

#include "hypertoda/error.hpp"

#include <cmath>
#include <numbers>

namespace hypertoda
{

namespace
{

using std::numbers::pi;

// Moments -(i/2) int_0^pi x^m / s(theta) dtheta, m = 0..2g-1, for the segment
// x = c + h cos(theta) between branch points a and b. Midpoint nodes in theta.
std::vector<Complex> segment_moments_at(const std::vector<Complex> &branch, int a, int b, int n, int nmom)
{
    const Complex ea = branch[a];
    const Complex eb = branch[b];
    const Complex c = 0.5 * (ea + eb);
    const Complex h = 0.5 * (eb - ea);
    std::vector<Complex> acc(nmom);
    Complex prev_s{};
    for (int j = 0; j < n; ++j) {
        const double theta = pi * (n - j - 0.5) / n;
        const Complex x = c + h * std::cos(theta);
        Complex prod{1.0};
        for (int k = 0; k < static_cast<int>(branch.size()); ++k) {
            if (k != a && k != b) {
                prod *= x - branch[k];
            }
        }
        Complex s = std::sqrt(prod);
        if (j > 0 && std::abs(s + prev_s) < std::abs(s - prev_s)) {
            s = -s;
        }
        prev_s = s;
        Complex xp{1.0};
        for (int m = 0; m < nmom; ++m) {
            acc[m] += xp / s;
            xp *= x;
        }
    }
    const Complex factor = Complex(0, -0.5) * (pi / n);
    for (auto &v : acc) {
        v *= factor;
    }
    return acc;
}

struct Moments {
    std::vector<std::vector<Complex>> per_segment;
    double error = 0;
};

Moments segment_moments(const std::vector<Complex> &branch, const std::vector<std::pair<int, int>> &segs,
                        int nmom, const QuadratureConfig &q)
{
    Moments out;
    for (const auto &[a, b] : segs) {
        int n = q.initial_nodes;
        auto prev = segment_moments_at(branch, a, b, n, nmom);
        double diff = 0;
        bool ok = false;
        while (n < q.max_nodes) {
            n *= 2;
            auto cur = segment_moments_at(branch, a, b, n, nmom);
            double scale = 0;
            diff = 0;
            for (int m = 0; m < nmom; ++m) {
                scale = std::max(scale, std::abs(cur[m]));
                diff = std::max(diff, std::abs(cur[m] - prev[m]));
            }
            prev = std::move(cur);
            if (diff <= q.tol * std::max(1.0, scale)) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw Error(ErrorCode::QuadratureNonConvergence,
                        "segment integral changed by " + std::to_string(diff) + " at " + std::to_string(n) +
                            " nodes");
        }
        out.error = std::max(out.error, diff);
        out.per_segment.push_back(std::move(prev));
    }
    return out;
}

std::vector<std::pair<int, int>> chain_segments(int genus)
{
    std::vector<std::pair<int, int>> segs;
    for (int k = 0; k < 2 * genus; ++k) {
        segs.emplace_back(k, k + 1);
    }
    return segs;
}

// Full-loop integrals of the first- and second-kind differentials over the
// chain cycles: rows are differentials, columns chain cycles.
std::pair<MatrixXcd, MatrixXcd> chain_loops(const HyperellipticCurve &curve, const Moments &mom)
{
    const int g = curve.genus();
    const auto numer = second_kind_numerators(curve);
    MatrixXcd om(g, 2 * g);
    MatrixXcd et(g, 2 * g);
    for (int k = 0; k < 2 * g; ++k) {
        const auto &m = mom.per_segment[k];
        for (int i = 0; i < g; ++i) {
            om(i, k) = 2.0 * m[i];
            Complex v{};
            for (int p = 0; p <= numer[i].degree(); ++p) {
                v += numer[i].coeff(p) * m[p];
            }
            et(i, k) = 2.0 * v;
        }
    }
    return {om, et};
}

int pair_int(const MatrixXi &K, const Eigen::VectorXi &x, const Eigen::VectorXi &y)
{
    return x.dot(K * y);
}

} // namespace

Complex first_kind_diff(const HyperellipticCurve &curve, int i, const CurvePoint &p)
{
    if (i < 1 || i > curve.genus()) {
        throw Error(ErrorCode::InvalidArgument, "first-kind index out of range");
    }
    if (p.at_infinity || p.y == Complex{}) {
        throw Error(ErrorCode::BranchPointSingularity, "first-kind differential at y = 0");
    }
    return std::pow(p.x, i - 1) / (2.0 * p.y);
}

std::vector<ComplexPolynomial> second_kind_numerators(const HyperellipticCurve &curve)
{
    const int g = curve.genus();
    std::vector<ComplexPolynomial> out;
    for (int j = 1; j <= g; ++j) {
        std::vector<Complex> c(static_cast<std::size_t>(2 * g - j) + 1);
        for (int k = j; k <= 2 * g - j; ++k) {
            c[k] = static_cast<double>(k + 1 - j) * curve.lambda(k + 1 + j);
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

Complex second_kind_diff(const HyperellipticCurve &curve, int j, const CurvePoint &p)
{
    if (j < 1 || j > curve.genus()) {
        throw Error(ErrorCode::InvalidArgument, "second-kind index out of range");
    }
    if (p.at_infinity || p.y == Complex{}) {
        throw Error(ErrorCode::BranchPointSingularity, "second-kind differential at y = 0");
    }
    return second_kind_numerators(curve)[j - 1](p.x) / (2.0 * p.y);
}

CycleBasis build_cycles(const HyperellipticCurve &curve, const QuadratureConfig &quad)
{
    const int g = curve.genus();
    CycleBasis cb;
    cb.branch = curve.branch_points();
    cb.segments = chain_segments(g);
    const auto mom = segment_moments(cb.branch, cb.segments, 2 * g, quad);
    const auto [om, et] = chain_loops(curve, mom);

    MatrixXi K(2 * g, 2 * g);
    for (int k = 0; k < 2 * g; ++k) {
        for (int l = 0; l < 2 * g; ++l) {
            Complex s{};
            for (int i = 0; i < g; ++i) {
                s += om(i, k) * et(i, l) - et(i, k) * om(i, l);
            }
            const Complex r = s / Complex(0, 2 * pi);
            const double rr = std::round(r.real());
            if (std::abs(r - rr) > 1e-3) {
                throw Error(ErrorCode::CycleBasisFailure, "non-integral intersection number");
            }
            K(k, l) = static_cast<int>(rr);
        }
    }
    cb.chain_intersection = K;

    std::vector<Eigen::VectorXi> pool;
    for (int k = 0; k < 2 * g; ++k) {
        pool.push_back(Eigen::VectorXi::Unit(2 * g, k));
    }
    cb.alpha.resize(2 * g, g);
    cb.beta.resize(2 * g, g);
    for (int a = 0; a < g; ++a) {
        bool found = false;
        for (std::size_t vi = 0; vi < pool.size() && !found; ++vi) {
            if (pool[vi].isZero()) {
                continue;
            }
            for (std::size_t wi = 0; wi < pool.size(); ++wi) {
                const int kvw = pair_int(K, pool[vi], pool[wi]);
                if (wi == vi || std::abs(kvw) != 1) {
                    continue;
                }
                const Eigen::VectorXi alpha = pool[vi];
                const Eigen::VectorXi beta = kvw * pool[wi];
                cb.alpha.col(a) = alpha;
                cb.beta.col(a) = beta;
                std::vector<Eigen::VectorXi> rest;
                for (std::size_t r = 0; r < pool.size(); ++r) {
                    if (r == vi || r == wi) {
                        continue;
                    }
                    Eigen::VectorXi x = pool[r];
                    x = x - pair_int(K, x, beta) * alpha + pair_int(K, x, alpha) * beta;
                    rest.push_back(x);
                }
                pool = std::move(rest);
                found = true;
                break;
            }
        }
        if (!found) {
            throw Error(ErrorCode::CycleBasisFailure, "could not complete a symplectic basis");
        }
    }
    return cb;
}

PeriodData compute_periods(const HyperellipticCurve &curve, const CycleBasis &cycles, const PeriodConfig &cfg)
{
    const int g = curve.genus();
    const auto mom = segment_moments(cycles.branch, cycles.segments, 2 * g, cfg.quad);
    const auto [om, et] = chain_loops(curve, mom);

    PeriodData pd;
    const MatrixXcd A = cycles.alpha.cast<Complex>();
    const MatrixXcd B = cycles.beta.cast<Complex>();
    pd.omega1 = 0.5 * om * A;
    pd.omega2 = 0.5 * om * B;
    pd.eta1 = 0.5 * et * A;
    pd.eta2 = 0.5 * et * B;
    pd.riemann = pd.omega1.partialPivLu().solve(pd.omega2);
    pd.error_estimate = mom.error;
    pd.legendre_residual = legendre_residual(pd);
    if (!(pd.legendre_residual <= cfg.certificate_tol)) {
        throw Error(ErrorCode::LegendreCertificateFailure,
                    "Legendre residual " + std::to_string(pd.legendre_residual));
    }
    return pd;
}

PeriodData compute_periods(const HyperellipticCurve &curve, const PeriodConfig &cfg)
{
    return compute_periods(curve, build_cycles(curve, cfg.quad), cfg);
}

double legendre_residual(const PeriodData &pd)
{
    const int g = pd.genus();
    MatrixXcd M(2 * g, 2 * g);
    M << pd.omega1, pd.omega2, pd.eta1, pd.eta2;
    MatrixXcd J = MatrixXcd::Zero(2 * g, 2 * g);
    J.topRightCorner(g, g) = -MatrixXcd::Identity(g, g);
    J.bottomLeftCorner(g, g) = MatrixXcd::Identity(g, g);
    const MatrixXcd R = M * J * M.transpose() - Complex(0, pi / 2) * J;
    return R.cwiseAbs().maxCoeff();
}

VectorXd lattice_coordinates(const PeriodData &pd, const VectorXcd &u)
{
    const int g = pd.genus();
    MatrixXcd W(g, 2 * g);
    W << 2.0 * pd.omega1, 2.0 * pd.omega2;
    MatrixXd R(2 * g, 2 * g);
    R << W.real(), W.imag();
    VectorXd rhs(2 * g);
    rhs << u.real(), u.imag();
    return R.fullPivLu().solve(rhs);
}

VectorXcd lattice_vector(const PeriodData &pd, const Eigen::VectorXi &m)
{
    const int g = pd.genus();
    return 2.0 * pd.omega1 * m.head(g).cast<Complex>() + 2.0 * pd.omega2 * m.tail(g).cast<Complex>();
}

LatticeReduction reduce_to_fundamental(const PeriodData &pd, const VectorXcd &u)
{
    const VectorXd r = lattice_coordinates(pd, u);
    LatticeReduction out;
    out.shift = r.array().round().cast<int>().matrix();
    out.reduced = u - lattice_vector(pd, out.shift);
    const double scale = 2.0 * std::max(pd.omega1.cwiseAbs().maxCoeff(), pd.omega2.cwiseAbs().maxCoeff());
    out.residual = out.reduced.cwiseAbs().maxCoeff() / scale;
    return out;
}

} // namespace hypertoda
